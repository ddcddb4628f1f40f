#pragma once

#include <stdexcept>
#include <string>

namespace qembed {

enum class Err {
    // group construction
    NotAssociative,
    NoIdentity,
    NoInverse,
    NotABijection,
    ClosureTooLarge,
    BadModulus,
    NotASubgroup,
    // quandle / triplet
    TripletInvalid,
    TooLarge,
    NotHomogeneous,
    StabilizerNotFixed,
    // embeddings
    NotInner,
    WitnessMismatch,
    // clifford
    DimensionMismatch,
    NotUnit,
    NotGrade1,
    NotOrthogonal,
    NotLiftable,
    CapExceeded,
    // geometry
    ThetaPi,
    OddElement,
    // io / cli
    BadInput,
    // invariant breach, never expected
    InternalFault,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

// Guard for conditions that the theory guarantees; a breach is a bug, not bad input.
inline void require_internal(bool cond, const std::string& what) {
    if (!cond) throw Error(Err::InternalFault, what);
}

} // namespace qembed
