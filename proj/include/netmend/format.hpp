#pragma once

#include <cstdio>
#include <string>

namespace netmend::detail {

/// Fixed 6-significant-digit rendering used by every CSV/JSON emitter, so a
/// given series always serializes to identical bytes.
inline std::string format_real(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

}  // namespace netmend::detail
