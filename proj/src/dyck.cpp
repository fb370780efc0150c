#include "qblocks/dyck.hpp"

#include <algorithm>
#include <sstream>

namespace qblocks {

DyckPath::DyckPath(std::vector<int> heights) : heights_(std::move(heights)) {
  if (heights_.empty() || heights_.size() % 2 == 0) {
    throw std::invalid_argument("Dyck path must have an odd number of heights");
  }
  if (heights_.front() != 0 || heights_.back() != 0) {
    throw std::invalid_argument("Dyck path must start and end at height 0");
  }
  for (std::size_t j = 1; j < heights_.size(); ++j) {
    if (std::abs(heights_[j] - heights_[j - 1]) != 1) {
      throw std::invalid_argument("Dyck path steps must be +1 or -1 (position " + std::to_string(j) + ")");
    }
    if (heights_[j] < 0) {
      throw std::invalid_argument("Dyck path goes below zero at position " + std::to_string(j));
    }
  }
}

DyckPath DyckPath::from_steps(std::string_view steps) {
  std::vector<int> h{0};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const char c = steps[i];
    if (c == 'U' || c == 'u') {
      h.push_back(h.back() + 1);
    } else if (c == 'D' || c == 'd') {
      if (h.back() == 0) {
        throw PathParseError("step " + std::to_string(i) + " goes below height 0", i);
      }
      h.push_back(h.back() - 1);
    } else {
      throw PathParseError(std::string("invalid step character '") + c + "' at index " + std::to_string(i), i);
    }
  }
  if (h.back() != 0) {
    throw PathParseError("path ends at height " + std::to_string(h.back()) + ", not 0", steps.size());
  }
  return DyckPath(std::move(h));
}

std::string DyckPath::steps() const {
  std::string s;
  s.reserve(heights_.size() - 1);
  for (std::size_t j = 1; j < heights_.size(); ++j) s.push_back(heights_[j] > heights_[j - 1] ? 'U' : 'D');
  return s;
}

std::string DyckPath::heights_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < heights_.size(); ++j) os << (j ? "," : "") << heights_[j];
  os << ")";
  return os.str();
}

const char* shape_name(LocalShape s) {
  switch (s) {
    case LocalShape::UpWedge:
      return "up-wedge";
    case LocalShape::DownWedge:
      return "down-wedge";
    case LocalShape::UpSlope:
      return "up-slope";
    case LocalShape::DownSlope:
      return "down-slope";
  }
  return "?";
}

namespace {

void extend(std::vector<int>& h, int n, std::vector<DyckPath>& out) {
  const int len = static_cast<int>(h.size()) - 1;
  if (len == 2 * n) {
    out.emplace_back(h);
    return;
  }
  const int cur = h.back();
  const int remaining = 2 * n - len;
  // Down first so that the output is already lexicographic.
  if (cur > 0) {
    h.push_back(cur - 1);
    extend(h, n, out);
    h.pop_back();
  }
  if (cur + 1 <= remaining - 1) {
    h.push_back(cur + 1);
    extend(h, n, out);
    h.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> enumerate_paths(int n) {
  if (n < 0 || n > kMaxEnumerateN) {
    throw std::invalid_argument("enumerate_paths: N must be in [0, " + std::to_string(kMaxEnumerateN) + "]");
  }
  std::vector<DyckPath> out;
  std::vector<int> h{0};
  extend(h, n, out);
  return out;
}

LocalShape local_shape(const DyckPath& path, int j) {
  if (j < 1 || j > path.steps_count() - 1) {
    throw std::out_of_range("local_shape: position " + std::to_string(j) + " outside [1, 2N-1]");
  }
  const int before = path[j - 1];
  const int here = path[j];
  const int after = path[j + 1];
  if (before == after) return here > before ? LocalShape::UpWedge : LocalShape::DownWedge;
  return after > before ? LocalShape::UpSlope : LocalShape::DownSlope;
}

DyckPath remove_wedge(const DyckPath& path, int j) {
  if (!is_wedge(local_shape(path, j))) {
    throw std::invalid_argument("remove_wedge: no wedge at position " + std::to_string(j));
  }
  auto h = path.heights();
  std::vector<int> out(h.begin(), h.begin() + j);
  out.insert(out.end(), h.begin() + j + 2, h.end());
  return DyckPath(std::move(out));
}

DyckPath insert_wedge(const DyckPath& path, int j, LocalShape kind) {
  if (!is_wedge(kind)) throw std::invalid_argument("insert_wedge: kind must be a wedge");
  if (j < 1 || j > path.steps_count() + 1) throw std::out_of_range("insert_wedge: position out of range");
  auto h = path.heights();
  const int base = h[static_cast<std::size_t>(j - 1)];
  std::vector<int> out(h.begin(), h.begin() + j);
  out.push_back(kind == LocalShape::UpWedge ? base + 1 : base - 1);
  out.push_back(base);
  out.insert(out.end(), h.begin() + j, h.end());
  return DyckPath(std::move(out));
}

bool path_leq(const DyckPath& a, const DyckPath& b) {
  if (a.steps_count() != b.steps_count()) throw std::invalid_argument("path_leq: paths differ in length");
  auto ha = a.heights();
  auto hb = b.heights();
  for (std::size_t j = 0; j < ha.size(); ++j) {
    if (ha[j] > hb[j]) return false;
  }
  return true;
}

long long catalan(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace qblocks
