// SPDX-License-Identifier: Apache-2.0

#ifndef TLAB_VERSION_HPP_
#define TLAB_VERSION_HPP_

namespace tlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tlab

#endif  // TLAB_VERSION_HPP_
