#pragma once

namespace blc {

inline constexpr const char* kVersion = "0.1.0";

}
