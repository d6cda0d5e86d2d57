#pragma once

namespace combgape {

inline constexpr const char* kVersion = "0.1.0";

}
