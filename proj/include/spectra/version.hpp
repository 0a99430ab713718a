#pragma once

namespace spectra {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spectra
