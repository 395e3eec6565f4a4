#ifndef NLDIC_ERROR_HPP
#define NLDIC_ERROR_HPP

#include <stdexcept>
#include <string>

#include <nldic/common.hpp>

namespace nldic {

enum class Errc {
    ZeroDivisor,
    SearchExhausted,
    EmptyInterval,
    NoSolution,
    AmbiguousSolution,
    SyntaxError,
    IndexOutOfRange,
    Overflow,
    ZeroPolynomial,
    StructureViolation,
    InjectivityViolation,
    ConditionViolated,
    CongruenceViolated,
    NotDivisible,
    NotInImage,
    BudgetExceeded,
    InvalidArgument,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const { return code_; }

    // Optional structured payload: a colliding pair for InjectivityViolation,
    // the byte position for SyntaxError, the argument position for
    // ConditionViolated.
    u64 detail_a = 0;
    u64 detail_b = 0;

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace nldic

#endif // NLDIC_ERROR_HPP
