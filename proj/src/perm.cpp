#include "endotriv/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace endotriv {

namespace {

void check_bijection(const std::vector<Point>& images) {
  std::vector<char> seen(images.size(), 0);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw InputError("malformed permutation: not a bijection");
    seen[x] = 1;
  }
}

std::vector<std::size_t> parse_numbers(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > 65535) throw InputError("point index out of range");
        ++i;
      }
      out.push_back(v);
    } else if (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    } else {
      throw InputError(std::string("unexpected character '") + text[i] + "' in permutation");
    }
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) { check_bijection(images_); }

Perm Perm::parse(std::string_view text, std::size_t degree) {
  auto t = trim(text);
  if (!t.empty() && t.front() == '[') {
    Perm p = from_images(t);
    if (degree != 0 && p.degree() != degree)
      throw InputError("image list length does not match degree");
    return p;
  }
  return from_cycles(t, degree);
}

Perm Perm::from_images(std::string_view text) {
  auto t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw InputError("image form must look like [2,0,1]");
  auto nums = parse_numbers(t.substr(1, t.size() - 2));
  std::vector<Point> images(nums.begin(), nums.end());
  return Perm(std::move(images));
}

Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::size_t>> cycles;
  auto t = trim(text);
  std::size_t i = 0;
  while (i < t.size()) {
    if (std::isspace(static_cast<unsigned char>(t[i]))) {
      ++i;
      continue;
    }
    if (t[i] != '(') throw InputError("cycle form must look like (1 2 3)(4 5)");
    auto close = t.find(')', i);
    if (close == std::string_view::npos) throw InputError("unbalanced parenthesis in cycle");
    cycles.push_back(parse_numbers(t.substr(i + 1, close - i - 1)));
    i = close + 1;
  }
  return from_cycle_list(cycles, degree);
}

Perm Perm::from_cycle_list(const std::vector<std::vector<std::size_t>>& cycles,
                           std::size_t degree) {
  Perm p(degree);
  std::vector<char> used(degree, 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      std::size_t a = c[k];
      if (a == 0 || a > degree) throw InputError("cycle point out of range (cycles are 1-based)");
      if (used[a - 1]) throw InputError("malformed permutation: point repeated in cycles");
      used[a - 1] = 1;
      std::size_t b = c[(k + 1) % c.size()];
      if (b == 0 || b > degree) throw InputError("cycle point out of range (cycles are 1-based)");
      p.images_[a - 1] = static_cast<Point>(b - 1);
    }
  }
  return p;
}

Perm Perm::operator*(const Perm& other) const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = other.images_[images_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::conjugate_by(const Perm& g) const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[g.images_[i]] = g.images_[images_[i]];
  return r;
}

Perm Perm::pow(long long e) const {
  Perm base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Perm acc(degree());
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> lens;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::size_t Perm::order() const {
  std::size_t o = 1;
  for (auto len : cycle_type()) o = std::lcm(o, len);
  return o;
}

std::string Perm::to_cycles() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
    }
    os << ')';
  }
  auto s = os.str();
  return s.empty() ? "()" : s;
}

std::string Perm::to_images() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ',';
    os << images_[i];
  }
  os << ']';
  return os.str();
}

std::uint64_t hash_points(std::span<const Point> images) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point x : images) {
    h ^= x;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

}  // namespace endotriv
