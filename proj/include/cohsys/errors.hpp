#pragma once
// Error taxonomy. Every precondition violation maps to a named exception so
// callers (and the CLI exit-code contract) can distinguish input errors from
// engine bugs.

#include <stdexcept>
#include <string>

namespace cohsys {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define COHSYS_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

// curve_oracle
COHSYS_DEFINE_ERROR(NonGeneralCurve);
COHSYS_DEFINE_ERROR(InvalidK);
COHSYS_DEFINE_ERROR(GenusTooSmall);
COHSYS_DEFINE_ERROR(InvalidRank);
COHSYS_DEFINE_ERROR(UnsupportedRank);
COHSYS_DEFINE_ERROR(InvalidRange);

// stability_core
COHSYS_DEFINE_ERROR(NegativeAlpha);
COHSYS_DEFINE_ERROR(NotGenerated);
COHSYS_DEFINE_ERROR(NonPositiveDegree);
COHSYS_DEFINE_ERROR(NoExcessSections);
COHSYS_DEFINE_ERROR(NotProper);
COHSYS_DEFINE_ERROR(EmptyCaps);

// profile_engine
COHSYS_DEFINE_ERROR(ProfileInvalid);
COHSYS_DEFINE_ERROR(NonPositiveAlpha);
COHSYS_DEFINE_ERROR(TooFewSections);
COHSYS_DEFINE_ERROR(ForbiddenRow);

// constructions
COHSYS_DEFINE_ERROR(InfeasibleExtension);
COHSYS_DEFINE_ERROR(WindowEmpty);
COHSYS_DEFINE_ERROR(VerdictMismatch);

// butler_checks
COHSYS_DEFINE_ERROR(WrongType);
COHSYS_DEFINE_ERROR(NetStatusUnknown);

// cli_reporting
COHSYS_DEFINE_ERROR(ParseError);
COHSYS_DEFINE_ERROR(SchemaError);
COHSYS_DEFINE_ERROR(ContradictionError);

#undef COHSYS_DEFINE_ERROR

} // namespace cohsys
