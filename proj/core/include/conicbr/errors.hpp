#ifndef CONICBR_ERRORS_HPP
#define CONICBR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conicbr {

// Every throwing path uses one of these. `reason()` is a stable,
// machine-readable tag; what() carries the human-readable details.
class Error : public std::runtime_error {
public:
    Error(std::string reason, const std::string& msg)
        : std::runtime_error(msg), reason_(std::move(reason)) {}
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

struct ZeroInput : Error {
    explicit ZeroInput(const std::string& msg) : Error("ZeroInput", msg) {}
};

struct FactorBoundExceeded : Error {
    explicit FactorBoundExceeded(const std::string& msg) : Error("FactorBoundExceeded", msg) {}
};

struct PointNotOnCurve : Error {
    explicit PointNotOnCurve(const std::string& msg) : Error("PointNotOnCurve", msg) {}
};

struct PointAtInfinity : Error {
    explicit PointAtInfinity(const std::string& msg) : Error("PointAtInfinity", msg) {}
};

struct DegenerateForm : Error {
    explicit DegenerateForm(const std::string& msg) : Error("DegenerateForm", msg) {}
};

struct PoleOrZeroAtPoint : Error {
    explicit PoleOrZeroAtPoint(const std::string& msg) : Error("PoleOrZeroAtPoint", msg) {}
};

struct NegativeUnderRoot : Error {
    explicit NegativeUnderRoot(const std::string& msg) : Error("NegativeUnderRoot", msg) {}
};

struct NotDivisibleBy2 : Error {
    explicit NotDivisibleBy2(const std::string& msg) : Error("NotDivisibleBy2", msg) {}
};

struct HypothesisFailed : Error {
    explicit HypothesisFailed(const std::string& msg) : Error("HypothesisFailed", msg) {}
};

struct SearchExhausted : Error {
    explicit SearchExhausted(const std::string& msg) : Error("SearchExhausted", msg) {}
};

struct NotConnected : Error {
    explicit NotConnected(const std::string& msg) : Error("NotConnected", msg) {}
};

struct TwoTorsionInS : Error {
    explicit TwoTorsionInS(const std::string& msg) : Error("TwoTorsionInS", msg) {}
};

struct UnsupportedClosedPoint : Error {
    explicit UnsupportedClosedPoint(const std::string& msg) : Error("UnsupportedClosedPoint", msg) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& msg) : Error("LengthMismatch", msg) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error("InvalidInput", msg) {}
};

}  // namespace conicbr

#endif
