#ifndef CB_ERROR_HPP
#define CB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cb {

/// Library-wide exception carrying a machine-readable failure kind.
class Error : public std::runtime_error {
   public:
    enum class Kind {
        NotPrime,
        Overflow,
        DivisionByZero,
        LogOfZero,
        TooLarge,
        FieldMismatch,
        Syntax,
        RankDeficient,
        ValueOutOfRange,
        BadParams,
        BadDim,
        DomainError,
        NotFound,
        ZeroCodeword,
        DegenerateColumn,
        NotSpanning,
        LengthTooLong,
    };

    Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

    static const char* kind_name(Kind k) {
        switch (k) {
            case Kind::NotPrime: return "NotPrime";
            case Kind::Overflow: return "Overflow";
            case Kind::DivisionByZero: return "DivisionByZero";
            case Kind::LogOfZero: return "LogOfZero";
            case Kind::TooLarge: return "TooLarge";
            case Kind::FieldMismatch: return "FieldMismatch";
            case Kind::Syntax: return "Syntax";
            case Kind::RankDeficient: return "RankDeficient";
            case Kind::ValueOutOfRange: return "ValueOutOfRange";
            case Kind::BadParams: return "BadParams";
            case Kind::BadDim: return "BadDim";
            case Kind::DomainError: return "DomainError";
            case Kind::NotFound: return "NotFound";
            case Kind::ZeroCodeword: return "ZeroCodeword";
            case Kind::DegenerateColumn: return "DegenerateColumn";
            case Kind::NotSpanning: return "NotSpanning";
            case Kind::LengthTooLong: return "LengthTooLong";
        }
        return "Unknown";
    }

   private:
    Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace cb

#endif
