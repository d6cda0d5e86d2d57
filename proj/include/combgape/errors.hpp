#pragma once

#include <stdexcept>

namespace combgape {

// Raised when an instance cannot support identification: the best action is
// not unique, or perturb-and-solve generation cannot produce two distinct
// actions. The batch runner discards such draws and redraws.
class DegenerateInstance : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}
