#include "endotriv/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <regex>

#include <json.hpp>

namespace endotriv {

namespace {

std::vector<std::size_t> iota1(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

Group from_cycles(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Perm> perms;
  for (const auto& g : gens) perms.push_back(Perm::parse(g, degree));
  return Group::from_generators(degree, std::move(perms));
}

// Affine maps x -> a x + b on Z/n, as permutations of 0..n-1.
Perm affine(std::size_t n, std::size_t a, std::size_t b) {
  std::vector<Point> img(n);
  for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>((a * x + b) % n);
  return Perm(std::move(img));
}

// Linear action of matrices over F_p on the nonzero vectors of F_p^d.
Group linear_on_vectors(std::uint64_t p, std::size_t d, const std::vector<std::vector<std::uint64_t>>& mats) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= p;
  auto digits = [&](std::size_t x) {
    std::vector<std::uint64_t> v(d);
    for (std::size_t i = 0; i < d; ++i, x /= p) v[i] = x % p;
    return v;
  };
  std::vector<Perm> perms;
  for (const auto& m : mats) {
    std::vector<Point> img(total - 1);
    for (std::size_t x = 1; x < total; ++x) {
      auto v = digits(x);
      std::size_t y = 0, scale = 1;
      for (std::size_t r = 0; r < d; ++r, scale *= p) {
        std::uint64_t s = 0;
        for (std::size_t c = 0; c < d; ++c) s += m[r * d + c] * v[c];
        y += (s % p) * scale;
      }
      img[x - 1] = static_cast<Point>(y - 1);
    }
    perms.emplace_back(std::move(img));
  }
  return Group::from_generators(total - 1, std::move(perms));
}

}  // namespace

Group symmetric_group(std::size_t n) {
  if (n < 1) throw InputError("degree must be positive");
  if (n == 1) return Group::from_generators(1, {});
  return Group::from_generators(n, {Perm::from_cycle_list({{1, 2}}, n), Perm::from_cycle_list({iota1(n)}, n)});
}

Group alternating_group(std::size_t n) {
  if (n < 1) throw InputError("degree must be positive");
  std::vector<Perm> gens;
  for (std::size_t k = 3; k <= n; ++k) gens.push_back(Perm::from_cycle_list({{1, 2, k}}, n));
  return Group::from_generators(n, std::move(gens));
}

Group dihedral_group(std::size_t n) {
  if (n < 3) throw InputError("dihedral groups need n >= 3");
  std::vector<Point> refl(n);
  for (std::size_t x = 0; x < n; ++x) refl[x] = static_cast<Point>((n - x) % n);
  return Group::from_generators(n, {affine(n, 1, 1), Perm(std::move(refl))});
}

Group cyclic_group(std::size_t n) {
  if (n < 1) throw InputError("order must be positive");
  return Group::from_generators(n, {affine(n, 1, 1 % n)});
}

Group extraspecial_extension(std::uint64_t p, const std::vector<std::uint64_t>& m) {
  if (p < 3 || m.size() != 4) throw InputError("need an odd prime and a 2x2 matrix");
  const std::uint64_t det = ((m[0] * m[3]) % p + p * p - (m[1] * m[2]) % p) % p;
  if (det == 0) throw InputError("matrix is singular");
  const std::uint64_t half = (p + 1) / 2;
  // Element (v1, v2, c) is encoded as v1 + p v2 + p^2 c.
  auto enc = [p](std::uint64_t a, std::uint64_t b, std::uint64_t c) { return a + p * b + p * p * c; };
  auto mul = [&](std::uint64_t x, std::uint64_t y) {
    const std::uint64_t a = x % p, b = (x / p) % p, c = x / (p * p);
    const std::uint64_t a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
    const std::uint64_t form = (half * ((a * b2) % p + p - (b * a2) % p)) % p;
    return enc((a + a2) % p, (b + b2) % p, (c + c2 + form) % p);
  };
  const std::size_t n = p * p * p;
  auto right = [&](std::uint64_t g) {
    std::vector<Point> img(n);
    for (std::uint64_t x = 0; x < n; ++x) img[x] = static_cast<Point>(mul(x, g));
    return Perm(std::move(img));
  };
  std::vector<Point> sigma(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t a = x % p, b = (x / p) % p, c = x / (p * p);
    sigma[x] = static_cast<Point>(enc((m[0] * a + m[1] * b) % p, (m[2] * a + m[3] * b) % p, (det * c) % p));
  }
  return Group::from_generators(n, {right(enc(1, 0, 0)), right(enc(0, 1, 0)), Perm(std::move(sigma))});
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    for (std::size_t n = 3; n <= 8; ++n) {
      std::uint64_t f = 1;
      for (std::size_t k = 2; k <= n; ++k) f *= k;
      e.push_back({"S" + std::to_string(n), "symmetric " + std::to_string(n), f, [n] { return symmetric_group(n); }});
      e.push_back({"A" + std::to_string(n), "alternating " + std::to_string(n), f / 2,
                   [n] { return alternating_group(n); }});
    }
    e.push_back({"C6", "cyclic 6", 6, [] { return cyclic_group(6); }});
    e.push_back({"D8", "dihedral 8", 16, [] { return dihedral_group(8); }});
    e.push_back({"S3wrC2", "wreath S3 by C2 on 6 points", 72,
                 [] { return from_cycles(6, {"(1 2)", "(1 2 3)", "(1 4)(2 5)(3 6)"}); }});
    e.push_back({"SL(2,3)", "linear on the 8 nonzero vectors of F_3^2", 24,
                 [] { return linear_on_vectors(3, 2, {{1, 1, 0, 1}, {1, 0, 1, 1}}); }});
    e.push_back({"GL(3,2)", "linear on the 7 nonzero vectors of F_2^3", 168,
                 [] { return linear_on_vectors(2, 3, {{1, 1, 0, 0, 1, 0, 0, 0, 1}, {0, 0, 1, 1, 0, 1, 0, 1, 0}}); }});
    e.push_back({"F21", "x -> x+1, x -> 2x on Z/7", 21,
                 [] { return Group::from_generators(7, {affine(7, 1, 1), affine(7, 2, 0)}); }});
    e.push_back({"F20", "x -> x+1, x -> 2x on Z/5", 20,
                 [] { return Group::from_generators(5, {affine(5, 1, 1), affine(5, 2, 0)}); }});
    e.push_back({"M11", "explicit generators on 11 points", 7920,
                 [] { return from_cycles(11, {"(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"}); }});
    e.push_back({"3^1+2:8", "extraspecial 3^(1+2) extended by M = [[1,2],[1,1]]", 216,
                 [] { return extraspecial_extension(3, {1, 2, 1, 1}); }});
    return e;
  }();
  return entries;
}

Group load_group(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed group file: ") + e.what());
    }
    if (!j.contains("degree") || !j.contains("generators")) throw InputError("group file needs degree and generators");
    return from_cycles(j.at("degree").get<std::size_t>(), j.at("generators").get<std::vector<std::string>>());
  }
  std::string name = spec == "PSL(2,7)" ? "GL(3,2)" : spec;
  for (const auto& e : catalog())
    if (e.name == name) {
      Group g = e.build();
      if (g.order() != e.expected_order)
        throw InputError(name + " has order " + std::to_string(g.order()) + ", expected " +
                         std::to_string(e.expected_order));
      return g;
    }
  static const std::regex family(R"(([SADCZ])(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, family)) {
    const std::size_t n = std::stoul(m[2]);
    switch (m[1].str()[0]) {
      case 'S': return symmetric_group(n);
      case 'A': return alternating_group(n);
      case 'D': return dihedral_group(n);
      default: return cyclic_group(n);
    }
  }
  throw InputError("unknown group: " + spec);
}

std::vector<std::pair<std::string, std::uint64_t>> property_catalog() {
  return {{"S3", 3},      {"S4", 2},      {"S4", 3},      {"A4", 2},       {"A4", 3},       {"SL(2,3)", 2},
          {"SL(2,3)", 3}, {"A5", 2},      {"A5", 3},      {"A5", 5},       {"S5", 2},       {"S5", 3},
          {"S5", 5},      {"GL(3,2)", 2}, {"GL(3,2)", 3}, {"GL(3,2)", 7},  {"F21", 3},      {"F21", 7},
          {"F20", 5},     {"D8", 2},      {"C6", 3},      {"S3wrC2", 3},   {"S6", 3},       {"S7", 3},
          {"3^1+2:8", 3}};
}

}  // namespace endotriv
