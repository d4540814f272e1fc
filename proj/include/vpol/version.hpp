#ifndef VPOL_VERSION_HPP
#define VPOL_VERSION_HPP

namespace vpol {
inline constexpr const char* version = "0.1.0";
}

#endif
