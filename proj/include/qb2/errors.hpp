#pragma once

#include <stdexcept>
#include <string>

namespace qb2 {

// All library errors derive from Error so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotCoprime : Error { using Error::Error; };
struct DegenerateParameters : Error { using Error::Error; };
struct NotRootOfUnity : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct LevelMismatch : Error { using Error::Error; };
struct ConfigMismatch : Error { using Error::Error; };
struct CaseMismatch : Error { using Error::Error; };
struct RankUnexpected : Error { using Error::Error; };
struct ConstraintViolated : Error { using Error::Error; };
struct ZeroParameter : Error { using Error::Error; };
struct SingularX1 : Error { using Error::Error; };
struct DimensionCeiling : Error { using Error::Error; };
struct FamilyMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace qb2
