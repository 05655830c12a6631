// SPDX-License-Identifier: Apache-2.0

#ifndef TLAB_CERT_CACHE_HPP_
#define TLAB_CERT_CACHE_HPP_

#include <filesystem>
#include <mutex>
#include <optional>

#include "tlab/ramsey.hpp"

namespace tlab {

// One file per (n, m, order): a JSON header line
// {"n":..,"m":..,"order":..,"verified_at":".."} followed by the digraph6
// line. Loads re-verify the digraph before returning it, so the cache is
// never trusted. Writes go through a temporary file and a rename.
class CertificateCache {
 public:
  explicit CertificateCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(int n, int m, int order) const;

  // Requires cert.verified(). Throws std::invalid_argument otherwise and
  // std::filesystem::filesystem_error on I/O failure.
  void store(const DrCertificate& cert);

  // nullopt on a miss; CacheCorrupt if the file is unreadable or the
  // digraph fails re-verification.
  std::optional<DrCertificate> load(int n, int m, int order) const;
  // Highest-order stored certificate for (n, m).
  std::optional<DrCertificate> load_best(int n, int m) const;

 private:
  std::filesystem::path dir_;
  mutable std::mutex write_mu_;
};

}  // namespace tlab

#endif  // TLAB_CERT_CACHE_HPP_
