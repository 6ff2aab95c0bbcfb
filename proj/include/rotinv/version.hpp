#ifndef ROTINV_VERSION_HPP
#define ROTINV_VERSION_HPP

namespace rotinv {

inline constexpr const char* tool_name = "rotinv";
inline constexpr const char* tool_version = "0.1.0";

}  // namespace rotinv

#endif  // ROTINV_VERSION_HPP
