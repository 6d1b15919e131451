#include "freebound/errors.hpp"

#include <sstream>
#include <utility>

namespace freebound {

namespace {

std::string describe(const std::string& quantity, double value) {
    std::ostringstream os;
    os << "assumption K > 0 and A1 > 0 violated: " << quantity << " = " << value;
    return os.str();
}

}  // namespace

AssumptionViolated::AssumptionViolated(std::string quantity, double value)
    : Error(describe(quantity, value)), quantity_(std::move(quantity)), value_(value) {}

}  // namespace freebound
