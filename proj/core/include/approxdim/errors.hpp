#ifndef APPROXDIM_ERRORS_HPP
#define APPROXDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace approxdim {

enum class Errc {
    DimensionMismatch,
    NotAdmissibleWithinBound,
    RelationIllFormed,
    AlgebraMismatch,
    LiftFailed,
    FieldTooSmall,
    RandomizationExhausted,
    IsInjective,
    NotIndecomposable,
    NotSelfInjective,
    HypothesisUnverifiable,
    NotWakamatsu,
    HypothesisFailed,
    ParseError,
    InvalidArgument,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

    // true for errors caused by bad user input (files, arguments) rather than
    // by a computation that could not finish
    bool is_input_error() const
    {
        return code_ == Errc::ParseError || code_ == Errc::InvalidArgument
            || code_ == Errc::RelationIllFormed;
    }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what)
{
    throw Error(code, what);
}

inline void require(bool cond, Errc code, const std::string& what)
{
    if (!cond)
        fail(code, what);
}

const char* errc_name(Errc code);

} // namespace approxdim

#endif
