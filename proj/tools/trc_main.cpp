// Command-line frontend: cosets, points, subcode, quantum, table, distance,
// catalog. Human-readable tables go to stdout; machine output (JSON lines or
// CSV) goes to --out or replaces stdout when --format is given.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "trc/distance.hpp"
#include "trc/presets.hpp"
#include "trc/quantum.hpp"
#include "trc/serialization.hpp"

using nlohmann::json;

namespace {

struct OutputOptions {
    std::string format;  // "", "jsonl", "csv"
    std::string out_path;
    std::string catalog_path;
};

std::ostream* machine_stream(const OutputOptions& o, std::ofstream& file, bool& to_stdout) {
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file.good()) throw trc::MalformedFile("cannot open " + o.out_path + " for writing");
        to_stdout = false;
        return &file;
    }
    if (!o.format.empty()) {
        to_stdout = true;
        return &std::cout;
    }
    return nullptr;
}

json record_json(const trc::CodeRecord& r) {
    json j;
    j["family"] = r.family;
    j["p"] = r.p;
    j["s"] = r.s;
    j["r"] = r.r;
    j["t"] = r.t;
    j["points"] = r.points_kind;
    j["derivations"] = r.derivations;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d_designed"] = r.d_designed;
    j["d_lb"] = r.d_lb;
    j["d_ub"] = r.d_ub;
    return j;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

void emit_records(const std::vector<trc::CodeRecord>& recs, const OutputOptions& o) {
    std::ofstream file;
    bool machine_on_stdout = false;
    std::ostream* mach = machine_stream(o, file, machine_on_stdout);

    if (!machine_on_stdout) {
        std::cout << "family      n     k  d_designed  d_lb  d_ub  t   points  derivations\n";
        for (const auto& r : recs) {
            std::cout << r.family << std::string(r.family.size() < 10 ? 10 - r.family.size() : 1, ' ')
                      << r.n << "  " << r.k << "  " << r.d_designed << "  "
                      << (r.d_lb >= 0 ? std::to_string(r.d_lb) : "-") << "  "
                      << (r.d_ub >= 0 ? std::to_string(r.d_ub) : "-") << "  " << r.t << "  "
                      << r.points_kind << "  " << r.derivations << "\n";
        }
    }
    if (mach) {
        if (o.format == "csv") {
            *mach << "n,k,d_designed,d_lb,d_ub,provenance\n";
            for (const auto& r : recs) {
                std::string prov = r.family + " p=" + std::to_string(r.p) + " s=" + std::to_string(r.s) +
                                   " r=" + std::to_string(r.r) + " t=" + std::to_string(r.t) +
                                   " points=" + r.points_kind;
                if (!r.derivations.empty()) prov += " " + r.derivations;
                *mach << r.n << "," << r.k << "," << r.d_designed << ","
                      << (r.d_lb >= 0 ? std::to_string(r.d_lb) : "") << ","
                      << (r.d_ub >= 0 ? std::to_string(r.d_ub) : "") << "," << csv_quote(prov) << "\n";
            }
        } else {
            for (const auto& r : recs) *mach << record_json(r).dump() << "\n";
        }
    }
    if (!o.catalog_path.empty())
        for (const auto& r : recs) trc::catalog_append(o.catalog_path, r);
}

trc::PointKind parse_kind(const std::string& s) {
    if (s == "z") return trc::PointKind::trace_roots;
    if (s == "z0" || s == "z_minus_zero" || s == "zminus0") return trc::PointKind::trace_roots_nonzero;
    if (s == "zt") return trc::PointKind::full;
    if (s == "zc") return trc::PointKind::complement;
    throw CLI::ValidationError("unknown point kind " + s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace-root evaluation codes toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string conway_path;
    app.add_option("--conway-path", conway_path,
                   "Conway polynomial data file (overrides TRC_CONWAY_PATH)");

    OutputOptions out_opts;
    app.add_option("--format", out_opts.format, "machine output format")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    app.add_option("--out", out_opts.out_path, "write machine output to this file");
    app.add_option("--catalog", out_opts.catalog_path, "append emitted records to this catalog file");

    std::uint32_t p = 2, s = 1, r = 4;
    auto add_psr = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "prime")->required();
        cmd->add_option("--s", s, "subfield exponent (s | r)")->required();
        cmd->add_option("--r", r, "big-field exponent")->required();
    };

    // cosets
    auto* c_cosets = app.add_subcommand("cosets", "minimal cyclotomic cosets");
    std::size_t limit = 0;
    add_psr(c_cosets);
    c_cosets->add_option("--limit", limit, "print only the first k cosets");

    // points
    auto* c_points = app.add_subcommand("points", "evaluation point sets");
    std::string kind_str = "z";
    add_psr(c_points);
    c_points->add_option("--kind", kind_str, "z or zc")->check(CLI::IsMember({"z", "zc"}));

    // subcode
    auto* c_subcode = app.add_subcommand("subcode", "subfield-subcode parameters");
    std::size_t t = 0;
    std::string points_str = "z";
    std::string export_path;
    bool export_dual = false;
    add_psr(c_subcode);
    c_subcode->add_option("--t", t, "last coset index of the consecutive union")->required();
    c_subcode->add_option("--points", points_str, "point set")->check(CLI::IsMember({"z", "zt", "zc"}));
    c_subcode->add_option("--export", export_path, "write the generator matrix as a code file");
    c_subcode->add_flag("--export-dual", export_dual, "export the Hermitian dual instead");

    // quantum
    auto* c_quantum = app.add_subcommand("quantum", "stabilizer code from the subfield pipeline");
    std::string qpoints_str = "z";
    std::string derive_str;
    bool allow_beyond = false;
    add_psr(c_quantum);
    c_quantum->add_option("--t", t, "last coset index")->required();
    c_quantum->add_option("--points", qpoints_str, "point set")
        ->check(CLI::IsMember({"z", "z0", "z_minus_zero", "zc"}));
    c_quantum->add_option("--derive", derive_str,
                          "comma list of puncture[:count] / subcode[:count] steps");
    c_quantum->add_flag("--allow-beyond-bound", allow_beyond,
                        "accept t beyond the admissibility bound when the Gram certificate passes");

    // table
    auto* c_table = app.add_subcommand("table", "reproduce a table preset");
    std::string preset;
    bool refine = false;
    std::uint64_t budget = trc::kDefaultDistanceBudget;
    bool verbose = false;
    c_table->add_option("--preset", preset, "t1..t6")->required()
        ->check(CLI::IsMember({"t1", "t2", "t3", "t4", "t5", "t6"}));
    c_table->add_flag("--refine-distance", refine, "run the distance module per row");
    c_table->add_option("--budget", budget, "distance work budget");
    c_table->add_flag("--verbose", verbose, "progress on stderr");

    // distance
    auto* c_distance = app.add_subcommand("distance", "minimum distance of a serialized code");
    std::string in_path, engine = "bz";
    std::uint64_t seed = 1, target = 0;
    c_distance->add_option("--in", in_path, "code file")->required();
    c_distance->add_option("--engine", engine, "enum, bz or lws")
        ->check(CLI::IsMember({"enum", "bz", "lws"}));
    c_distance->add_option("--budget", budget, "work budget (codeword evaluations)");
    c_distance->add_option("--seed", seed, "seed for lws");
    c_distance->add_option("--target", target, "target weight for lws");

    // catalog
    auto* c_catalog = app.add_subcommand("catalog", "verify an append-only results catalog");
    std::string cat_file;
    c_catalog->add_option("--file", cat_file, "catalog path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!conway_path.empty()) trc::set_conway_path(conway_path);

        if (*c_cosets) {
            const auto fam = trc::cyclotomic_cosets(p, s, r);
            const std::size_t count = limit ? std::min(limit, fam.cosets.size()) : fam.cosets.size();
            for (std::size_t i = 0; i < count; ++i) {
                json j;
                j["rep"] = fam.cosets[i].rep;
                j["size"] = fam.cosets[i].size();
                j["members"] = fam.cosets[i].members;
                std::cout << j.dump() << "\n";
            }
        } else if (*c_points) {
            trc::TraceSpec spec(p, s, r);
            const auto pts = trc::make_points(spec, parse_kind(kind_str));
            for (auto v : pts.points) {
                if (v == 0) {
                    std::cout << "0\n";
                } else {
                    const std::uint64_t e = spec.big->dlog(v);
                    std::cout << (e == 0 ? spec.big->size() - 1 : e) << "\n";
                }
            }
        } else if (*c_subcode) {
            trc::TraceSpec spec(p, s, r);
            const auto delta = trc::delta_sigma(spec.cosets, t);
            const auto pts = trc::make_points(spec, parse_kind(points_str));
            const auto code = trc::subfield_subcode(spec, delta, pts);
            json j;
            j["length"] = pts.points.size();
            j["designed_dim_bound"] = code.designed_dim_bound;
            j["actual_dim"] = code.actual_dim;
            j["dual_dim"] = pts.points.size() - code.actual_dim;
            j["designed_dual_distance"] =
                code.designed_dual_distance ? json(*code.designed_dual_distance) : json(nullptr);
            std::cout << j.dump() << "\n";
            if (!export_path.empty()) {
                const trc::Matrix out =
                    export_dual
                        ? trc::hermitian_dual(code.reduced, trc::HermitianContext(spec.sub, spec.s))
                        : code.reduced;
                trc::write_code_file(export_path, out);
            }
        } else if (*c_quantum) {
            trc::TraceSpec spec(p, s, r);
            auto res = trc::trace_stabilizer(spec, t, parse_kind(qpoints_str), !allow_beyond);
            trc::StabilizerParams params = res.params;
            std::string chain;
            if (!derive_str.empty()) {
                std::istringstream ss(derive_str);
                std::string step;
                while (std::getline(ss, step, ',')) {
                    std::size_t amount = 1;
                    const auto colon = step.find(':');
                    std::string name = step.substr(0, colon);
                    if (colon != std::string::npos) amount = std::stoull(step.substr(colon + 1));
                    trc::DerivationStep::Kind kd;
                    if (name == "puncture") kd = trc::DerivationStep::Kind::puncture;
                    else if (name == "subcode") kd = trc::DerivationStep::Kind::subcode;
                    else throw trc::InvalidDerivation("unknown derivation step " + name);
                    params = trc::derive(params, {kd, amount});
                    chain += (chain.empty() ? "" : ",") + name + " x" + std::to_string(amount);
                }
            }
            trc::CodeRecord rec;
            rec.family = "stabilizer";
            rec.p = p;
            rec.s = s;
            rec.r = r;
            rec.t = static_cast<std::int64_t>(t);
            rec.points_kind = qpoints_str;
            rec.derivations = chain;
            rec.n = params.length;
            rec.k = params.k;
            rec.d_designed = params.d_designed;
            std::cout << "[[" << params.length << ", " << params.k << ", >= " << params.d_designed
                      << "]]_" << params.alphabet << "   (" << params.provenance << ")\n";
            emit_records({rec}, out_opts);
        } else if (*c_table) {
            trc::PresetOptions popts;
            popts.refine_distance = refine;
            popts.budget = budget;
            if (verbose) popts.progress = [](const std::string& msg) { std::cerr << msg << "\n"; };
            const auto rows = trc::run_preset(preset, popts);
            std::vector<trc::CodeRecord> recs;
            recs.reserve(rows.size());
            for (const auto& row : rows) recs.push_back(row.record);
            emit_records(recs, out_opts);
        } else if (*c_distance) {
            const trc::Matrix g = trc::parse_code_file(in_path);
            json j;
            if (engine == "lws") {
                if (target == 0) throw trc::BudgetExceeded("lws requires --target");
                auto w = trc::low_weight_search(g, target, budget, seed);
                j["engine"] = "lws";
                j["found"] = w.has_value();
                if (w) j["weight"] = trc::hamming_weight(*w);
            } else {
                const auto res = engine == "enum" ? trc::exact_distance_enum(g, budget)
                                                  : trc::brouwer_zimmermann(g, budget);
                j["engine"] = res.method;
                j["lb"] = res.lb;
                j["ub"] = res.ub;
                j["exact"] = res.exact;
                j["work_spent"] = res.work_spent;
            }
            std::cout << j.dump() << "\n";
        } else if (*c_catalog) {
            const std::size_t n = trc::catalog_verify(cat_file);
            std::cout << "catalog OK, " << n << " records\n";
        }
    } catch (const trc::Error& e) {
        std::cerr << "error [" << e.name() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
