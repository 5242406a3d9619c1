#pragma once

#include <stdexcept>
#include <string>

namespace vecchoose
{
    /// Base of every exception thrown by the library. The kind string is
    /// stable and is what the CLI prints in front of the message.
    class Error : public std::runtime_error
    {
        private:
            std::string _kind;

        public:
            Error(std::string kind, const std::string & message) :
                std::runtime_error(kind + ": " + message),
                _kind(std::move(kind))
            {
            }

            auto kind() const -> const std::string & { return _kind; }
    };

#define VECCHOOSE_ERROR_KIND(Name) \
    class Name : public Error \
    { \
        public: \
            explicit Name(const std::string & message) : Error(#Name, message) { } \
    }

    VECCHOOSE_ERROR_KIND(DivisionByZero);
    VECCHOOSE_ERROR_KIND(FieldMismatch);
    VECCHOOSE_ERROR_KIND(InfiniteField);
    VECCHOOSE_ERROR_KIND(NoSuchElement);
    VECCHOOSE_ERROR_KIND(NotPrime);
    VECCHOOSE_ERROR_KIND(AmbientMismatch);
    VECCHOOSE_ERROR_KIND(InvalidParameter);
    VECCHOOSE_ERROR_KIND(PreconditionViolated);
    VECCHOOSE_ERROR_KIND(InternalError);
    VECCHOOSE_ERROR_KIND(BudgetExceeded);
    VECCHOOSE_ERROR_KIND(NotApplicable);
    VECCHOOSE_ERROR_KIND(FieldTooSmall);
    VECCHOOSE_ERROR_KIND(NotBipartite);
    VECCHOOSE_ERROR_KIND(NotSatisfying);
    VECCHOOSE_ERROR_KIND(ParseError);
    VECCHOOSE_ERROR_KIND(ClauseArityError);
    VECCHOOSE_ERROR_KIND(RepeatedVariableError);
    VECCHOOSE_ERROR_KIND(IoError);

#undef VECCHOOSE_ERROR_KIND

    /// A cycle propagation step whose orthogonality constraint vanishes
    /// identically in the parameter.
    class DegenerateStep : public Error
    {
        private:
            int _step;

        public:
            DegenerateStep(int step, const std::string & message) :
                Error("DegenerateStep", message),
                _step(step)
            {
            }

            auto step() const -> int { return _step; }
    };
}
