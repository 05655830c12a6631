// SPDX-License-Identifier: Apache-2.0

#include "tlab/cert_cache.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "tlab/errors.hpp"
#include "tlab/graph6.hpp"

namespace tlab {
namespace fs = std::filesystem;

namespace {

std::string utc_now() {
  std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

CertificateCache::CertificateCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path CertificateCache::path_for(int n, int m, int order) const {
  return dir_ / ("dr_n" + std::to_string(n) + "_m" + std::to_string(m) + "_o" +
                 std::to_string(order) + ".cert");
}

void CertificateCache::store(const DrCertificate& cert) {
  if (!cert.verified())
    throw std::invalid_argument("refusing to cache an unverified certificate");
  nlohmann::json header = {{"n", cert.n},
                           {"m", cert.m},
                           {"order", cert.order()},
                           {"verified_at", utc_now()}};
  std::lock_guard lock(write_mu_);
  fs::create_directories(dir_);
  fs::path target = path_for(cert.n, cert.m, cert.order());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw fs::filesystem_error("cannot write", tmp, {});
    out << header.dump() << '\n' << encode_digraph6(cert.digraph) << '\n';
    if (!out) throw fs::filesystem_error("write failed", tmp, {});
  }
  fs::rename(tmp, target);
}

std::optional<DrCertificate> CertificateCache::load(int n, int m,
                                                    int order) const {
  fs::path p = path_for(n, m, order);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  std::string header_line, graph_line;
  if (!std::getline(in, header_line) || !std::getline(in, graph_line))
    throw CacheCorrupt("truncated certificate file " + p.string());
  try {
    auto header = nlohmann::json::parse(header_line);
    if (header.at("n").get<int>() != n || header.at("m").get<int>() != m ||
        header.at("order").get<int>() != order)
      throw CacheCorrupt("certificate header does not match its key");
    BitDigraph d = decode_digraph6(graph_line);
    if (d.order() != order)
      throw CacheCorrupt("certificate digraph has the wrong order");
    return check_counterexample(d, n, m);
  } catch (const CacheCorrupt&) {
    throw;
  } catch (const std::exception& e) {
    throw CacheCorrupt("certificate " + p.string() +
                       " failed re-verification: " + e.what());
  }
}

std::optional<DrCertificate> CertificateCache::load_best(int n, int m) const {
  if (!fs::is_directory(dir_)) return std::nullopt;
  const std::regex name("dr_n" + std::to_string(n) + "_m" + std::to_string(m) +
                        "_o([0-9]+)\\.cert");
  int best = -1;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    std::smatch match;
    std::string fname = entry.path().filename().string();
    if (std::regex_match(fname, match, name))
      best = std::max(best, std::stoi(match[1]));
  }
  if (best < 0) return std::nullopt;
  return load(n, m, best);
}

}  // namespace tlab
