// Error types shared across the library. Every error carries a stable name
// that the CLI prints in diagnostics.
#pragma once

#include <stdexcept>
#include <string>

namespace trc {

class Error : public std::runtime_error {
  public:
    Error(std::string name, const std::string& what) : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

  private:
    std::string name_;
};

#define TRC_DEFINE_ERROR(NAME)                                                  \
    struct NAME : Error {                                                       \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}          \
    }

TRC_DEFINE_ERROR(NonPrimeCharacteristic);
TRC_DEFINE_ERROR(ReducibleModulus);
TRC_DEFINE_ERROR(MissingConwayEntry);
TRC_DEFINE_ERROR(DivisionByZero);
TRC_DEFINE_ERROR(FieldMismatch);
TRC_DEFINE_ERROR(NonDivisorDegree);
TRC_DEFINE_ERROR(NotInSubfield);
TRC_DEFINE_ERROR(DimensionMismatch);
TRC_DEFINE_ERROR(InvalidTower);
TRC_DEFINE_ERROR(IndexOutOfRange);
TRC_DEFINE_ERROR(EmptyDelta);
TRC_DEFINE_ERROR(ExponentOutOfRange);
TRC_DEFINE_ERROR(DeltaNotCosetClosed);
TRC_DEFINE_ERROR(NotDualContaining);
TRC_DEFINE_ERROR(BoundViolated);
TRC_DEFINE_ERROR(CertificationFailed);
TRC_DEFINE_ERROR(InvalidDerivation);
TRC_DEFINE_ERROR(BudgetExceeded);
TRC_DEFINE_ERROR(MalformedFile);
TRC_DEFINE_ERROR(TableBudgetExceeded);

#undef TRC_DEFINE_ERROR

}  // namespace trc
