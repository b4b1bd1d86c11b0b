#include "zll/snapshot.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zll {

std::string format_snapshot(int64_t m, int64_t n, double eps, const std::vector<uint8_t>& occ) {
  char head[96];
  std::snprintf(head, sizeof(head), "m=%lld n=%lld eps=%.17g\n", static_cast<long long>(m),
                static_cast<long long>(n), eps);
  std::string out(head);
  out.reserve(out.size() + occ.size() + 1);
  for (uint8_t o : occ) out.push_back(o ? '1' : '0');
  out.push_back('\n');
  return out;
}

std::string Snapshot::serialize() const { return format_snapshot(m, n, eps, occ); }

Snapshot Snapshot::parse(const std::string& text) {
  Snapshot s;
  std::istringstream in(text);
  std::string head;
  if (!std::getline(in, head)) throw std::runtime_error("snapshot: missing header");
  long long m = 0, n = 0;
  double eps = 0.0;
  if (std::sscanf(head.c_str(), "m=%lld n=%lld eps=%lf", &m, &n, &eps) != 3) {
    throw std::runtime_error("snapshot: malformed header: " + head);
  }
  std::string body;
  if (!std::getline(in, body)) throw std::runtime_error("snapshot: missing occupancy line");
  if (static_cast<long long>(body.size()) != m) {
    throw std::runtime_error("snapshot: occupancy length does not match m");
  }
  s.m = m;
  s.n = n;
  s.eps = eps;
  s.occ.resize(body.size());
  int64_t ones = 0;
  for (size_t i = 0; i < body.size(); i++) {
    if (body[i] != '0' && body[i] != '1') throw std::runtime_error("snapshot: bad occupancy char");
    s.occ[i] = body[i] == '1';
    ones += s.occ[i];
  }
  if (ones != n) throw std::runtime_error("snapshot: occupancy count does not match n");
  return s;
}

Snapshot Snapshot::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("snapshot: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void Snapshot::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("snapshot: cannot write " + path);
  out << serialize();
}

int64_t max_interior_gap(const std::vector<uint8_t>& occ) {
  int64_t best = 0;
  int64_t prev = -1;
  for (int64_t i = 0; i < static_cast<int64_t>(occ.size()); i++) {
    if (!occ[i]) continue;
    if (prev >= 0) best = std::max(best, i - prev - 1);
    prev = i;
  }
  return best;
}

}  // namespace zll
