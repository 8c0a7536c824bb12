#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace friezes {

/// Base class for all domain errors thrown by this library.
///
/// `code()` is a stable, machine readable name (for example "NotAOne").
/// The CLI prints it verbatim and exits with status 1; the Python bindings
/// translate it into a ValueError whose message starts with the code.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define FRIEZES_DEFINE_ERROR(Name)                                          \
    class Name : public DomainError {                                       \
    public:                                                                 \
        explicit Name(const std::string& what) : DomainError(#Name, what) {} \
    }

FRIEZES_DEFINE_ERROR(NotAOne);
FRIEZES_DEFINE_ERROR(IllegalReduction);
FRIEZES_DEFINE_ERROR(NotInfiniteType);
FRIEZES_DEFINE_ERROR(NotSkeletal);
FRIEZES_DEFINE_ERROR(NotACycleWord);
FRIEZES_DEFINE_ERROR(IndexOutOfRange);
FRIEZES_DEFINE_ERROR(RankMismatch);
FRIEZES_DEFINE_ERROR(OverlappingPairs);
FRIEZES_DEFINE_ERROR(LevelTooSmall);
FRIEZES_DEFINE_ERROR(IOFailure);

#undef FRIEZES_DEFINE_ERROR

}  // namespace friezes
