// One-command table reproduction. Each preset fixes (p, s, r), a point-set
// kind and a t-range per block, plus the derivation chains for the record
// tables; rows are emitted in a fixed order.
//
//   t1  classical F4 length-128 records and their shortening chains
//   t2  binary stabilizer records and their puncture/subcode derivations
//   t3  stabilizer codes over F4: lengths 64, 63 and 192
//   t4  stabilizer codes over F3: lengths 243, 242 and 486
//   t5  stabilizer codes over F5: lengths 125, 124 and 500
//   t6  stabilizer codes over F7: lengths 342 and 2058
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "trc/distance.hpp"
#include "trc/quantum.hpp"
#include "trc/serialization.hpp"

namespace trc {

struct PresetRow {
    CodeRecord record;
    // set for classical base rows so distance refinement can run on them
    std::optional<Matrix> generator;
};

struct PresetOptions {
    bool refine_distance = false;       // invoke the distance module per row
    std::uint64_t budget = kDefaultDistanceBudget;
    std::uint64_t seed = 0xD15EA5E5u;   // low-weight search seed
    std::function<void(const std::string&)> progress;  // optional logging
};

bool is_preset_name(const std::string& name);
std::vector<PresetRow> run_preset(const std::string& name, const PresetOptions& opts = PresetOptions{});

// Bounded search used when a record's coset union is not specified: scan the
// consecutive families below the given designed distance cap and keep the
// best dual dimension at each designed distance. Returns (t, dual_dim) pairs.
struct RecordCandidate {
    std::size_t t = 0;
    std::uint64_t designed_distance = 0;
    std::size_t dual_dim = 0;
};
std::vector<RecordCandidate> scan_record_candidates(const TraceSpec& spec, std::uint64_t min_designed,
                                                    std::uint64_t max_designed);

}  // namespace trc
