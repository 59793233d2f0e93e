#include "smoothpoly/seeds.hpp"

#include <algorithm>
#include <map>

namespace smoothpoly {

namespace {

struct RaySpec {
  const char* name;
  std::vector<const char*> coords;
};

struct LabelSpec {
  const char* first;
  const char* first_value;
  const char* second;
  const char* second_value;
};

int index_of(const std::vector<std::string>& names, const std::string& n) {
  auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end()) throw Error(ErrorCode::InvariantViolation, "unknown ray name " + n);
  return static_cast<int>(it - names.begin());
}

Seed build(const std::string& name, std::size_t dim, const std::vector<RaySpec>& rays,
           const std::vector<std::vector<const char*>>& cones, const std::vector<LabelSpec>& labels) {
  Seed s;
  s.name = name;
  s.fan.dim = dim;
  for (const auto& r : rays) {
    s.ray_names.emplace_back(r.name);
    ParamVector v;
    for (const char* c : r.coords) v.push_back(ParamExpr::parse(c));
    s.fan.rays.push_back(std::move(v));
  }
  for (const auto& c : cones) {
    ConeIndices cone;
    for (const char* n : c) cone.push_back(index_of(s.ray_names, n));
    std::sort(cone.begin(), cone.end());
    s.fan.cones.push_back(std::move(cone));
  }
  for (const auto& l : labels) {
    WallAnnotation a;
    a.labels.push_back({index_of(s.ray_names, l.first), ParamExpr::parse(l.first_value)});
    if (l.second != nullptr) {
      a.labels.push_back({index_of(s.ray_names, l.second), ParamExpr::parse(l.second_value)});
    }
    std::sort(a.labels.begin(), a.labels.end(),
              [](const WallLabel& x, const WallLabel& y) { return x.ray < y.ray; });
    for (const auto& lab : a.labels) a.rays.push_back(lab.ray);
    s.annotations.push_back(std::move(a));
  }
  return s;
}

// Quadrilateral with one diagonal, plus a ray joined to all four corners.
const std::vector<std::vector<const char*>> kSquareDiagonal = {
    {"u", "z+", "x"}, {"u", "x", "z-"}, {"inf", "u", "z+"},
    {"inf", "z+", "x"}, {"inf", "x", "z-"}, {"inf", "z-", "u"}};

Seed seed_fp() {
  return build("F_p", 2, {{"e1", {"1", "0"}}, {"e2", {"0", "1"}}, {"r", {"-1", "-1"}}},
               {{"e1", "e2"}, {"e2", "r"}, {"r", "e1"}},
               {{"e1", "-1", nullptr, nullptr}, {"e2", "-1", nullptr, nullptr},
                {"r", "-1", nullptr, nullptr}});
}

Seed seed_fa(const Int& n) {
  Seed s = build("F_a", 2,
                 {{"e1", {"1", "0"}}, {"e2", {"0", "1"}}, {"r", {"-1", "-a"}}, {"s", {"0", "-1"}}},
                 {{"e1", "e2"}, {"e2", "r"}, {"r", "s"}, {"s", "e1"}},
                 {{"e1", "0", nullptr, nullptr}, {"e2", "-a", nullptr, nullptr},
                  {"r", "0", nullptr, nullptr}, {"s", "a", nullptr, nullptr}});
  s.fan.bounds["a"] = {0, n};
  s.fan.excluded["a"] = {Int(1)};
  return s;
}

Seed seed_3_4() {
  return build("3^4", 3,
               {{"x", {"1", "0", "0"}}, {"y", {"0", "1", "0"}}, {"r", {"-1", "-1", "-1"}},
                {"z", {"0", "0", "1"}}},
               {{"x", "y", "r"}, {"x", "y", "z"}, {"x", "r", "z"}, {"y", "r", "z"}},
               {{"x", "-1", "y", "-1"}, {"x", "-1", "r", "-1"}, {"x", "-1", "z", "-1"},
                {"y", "-1", "r", "-1"}, {"y", "-1", "z", "-1"}, {"r", "-1", "z", "-1"}});
}

Seed seed_3_2_4_3_prime(const Int& n) {
  Seed s = build("(3^24^3)'", 3,
                 {{"u", {"-1", "-1", "-a"}}, {"z+", {"0", "0", "1"}}, {"x", {"1", "0", "0"}},
                  {"z-", {"0", "0", "-1"}}, {"inf", {"0", "1", "0"}}},
                 kSquareDiagonal,
                 {{"u", "0", "inf", "0"}, {"u", "0", "x", "0"}, {"x", "0", "inf", "0"},
                  {"z-", "a", "inf", "-1"}, {"u", "-1", "z-", "a"}, {"z-", "a", "x", "-1"},
                  {"z+", "-a", "inf", "-1"}, {"u", "-1", "z+", "-a"}, {"z+", "-a", "x", "-1"}});
  s.fan.bounds["a"] = {0, n};
  return s;
}

Seed seed_3_2_4_3_second(const Int& n) {
  // same combinatorics: p, y, z, x play u, inf, z+, ... of the square drawing
  Seed s = build("(3^24^3)''", 3,
                 {{"p", {"0", "-1", "-1"}}, {"x", {"1", "0", "0"}}, {"y", {"0", "1", "0"}},
                  {"q", {"-1", "b", "c"}}, {"z", {"0", "0", "1"}}},
                 {{"p", "x", "y"}, {"p", "y", "q"}, {"z", "p", "x"},
                  {"z", "x", "y"}, {"z", "y", "q"}, {"z", "q", "p"}},
                 {{"p", "-b", "z", "c-b"}, {"p", "-c", "y", "b-c"}, {"y", "b", "z", "c"},
                  {"q", "0", "z", "-1"}, {"p", "-1", "q", "0"}, {"q", "0", "y", "-1"},
                  {"x", "0", "z", "-1"}, {"p", "-1", "x", "0"}, {"x", "0", "y", "-1"}});
  s.fan.bounds["b"] = {-n, n};
  s.fan.bounds["c"] = {-n, n};
  return s;
}

Seed seed_4_6(const Int& n) {
  Seed s = build("4^6", 3,
                 {{"p", {"0", "-1", "b"}}, {"x", {"1", "0", "0"}}, {"y", {"0", "1", "0"}},
                  {"q", {"-1", "-a", "c"}}, {"w", {"0", "0", "-1"}}, {"z", {"0", "0", "1"}}},
                 {{"w", "p", "x"}, {"w", "x", "y"}, {"w", "y", "q"}, {"w", "q", "p"},
                  {"z", "p", "x"}, {"z", "x", "y"}, {"z", "y", "q"}, {"z", "q", "p"}},
                 {{"p", "a", "z", "c-ab"}, {"p", "a", "w", "ab-c"}, {"w", "-c", "y", "-a"},
                  {"y", "-a", "z", "c"}, {"q", "0", "w", "-b"}, {"w", "-b", "x", "0"},
                  {"q", "0", "z", "b"}, {"x", "0", "z", "b"}, {"p", "0", "q", "0"},
                  {"q", "0", "y", "0"}, {"p", "0", "x", "0"}, {"x", "0", "y", "0"}});
  for (const char* v : {"a", "b", "c"}) s.fan.bounds[v] = {-n, n};
  return s;
}

Seed seed_3_2_4_3_6_2(const Int& n) {
  Seed s = build("3^24^36^2", 3,
                 {{"s", {"0", "1", "-1"}}, {"y", {"0", "1", "0"}}, {"z", {"0", "0", "1"}},
                  {"w", {"0", "0", "-1"}}, {"m", {"-1", "2", "-1"}}, {"t", {"0", "-1", "-a"}},
                  {"x", {"1", "0", "0"}}},
                 {{"s", "w", "m"}, {"w", "m", "t"}, {"y", "z", "m"}, {"z", "m", "t"},
                  {"s", "m", "x"}, {"y", "m", "x"}, {"y", "z", "x"}, {"z", "t", "x"},
                  {"w", "t", "x"}, {"s", "w", "x"}},
                 {{"s", "2", "x", "-1"}, {"m", "0", "z", "-a"}, {"z", "-a", "x", "0"},
                  {"w", "a+1", "x", "0"}, {"w", "a+1", "m", "0"}, {"y", "2", "x", "-1"},
                  {"s", "2", "w", "-1"}, {"m", "1", "x", "1"}, {"m", "0", "t", "0"},
                  {"t", "0", "x", "0"}, {"y", "2", "z", "-1"}, {"s", "2", "m", "-1"},
                  {"m", "-1", "y", "2"}, {"w", "2a+1", "t", "-2"}, {"t", "-2", "z", "-2a-1"}});
  s.fan.bounds["a"] = {ceil_div(-n - 1, 2), floor_div(n - 1, 2)};
  return s;
}

}  // namespace

std::size_t ExcludedFan::cone_count() const {
  std::size_t incidences = 0;
  for (auto [k, count] : profile) incidences += static_cast<std::size_t>(k * count);
  return incidences / 3;
}

std::vector<std::string> seed_names(std::size_t dim) {
  if (dim == 2) return {"F_p", "F_a"};
  if (dim == 3) return {"3^4", "(3^24^3)'", "(3^24^3)''", "4^6", "3^24^36^2"};
  return {};
}

Seed make_seed(const std::string& name, const Int& max_points) {
  if (name == "F_p") return seed_fp();
  if (name == "F_a") return seed_fa(max_points);
  if (name == "3^4") return seed_3_4();
  if (name == "(3^24^3)'") return seed_3_2_4_3_prime(max_points);
  if (name == "(3^24^3)''") return seed_3_2_4_3_second(max_points);
  if (name == "4^6") return seed_4_6(max_points);
  if (name == "3^24^36^2") return seed_3_2_4_3_6_2(max_points);
  throw Error(ErrorCode::UnknownSeed, "unknown seed '" + name + "'");
}

std::vector<ExcludedFan> excluded_fans() {
  const std::string twelve = "12 maximal cones and a ray in 7 of them; no smooth 7-gon has <= 12 points";
  const std::string twelve6 = "12 maximal cones; polygon criterion bound exceeds 12";
  return {
      {"4^66^2", {{4, 6}, {6, 2}}, twelve6},
      {"3^24^47^2", {{3, 2}, {4, 4}, {7, 2}}, twelve},
      {"3^34^15^16^3", {{3, 3}, {4, 1}, {5, 1}, {6, 3}}, twelve6},
      {"3^24^25^26^2", {{3, 2}, {4, 2}, {5, 2}, {6, 2}}, twelve6},
      {"3^14^45^16^2", {{3, 1}, {4, 4}, {5, 1}, {6, 2}}, twelve6},
      {"3^24^15^46^1", {{3, 2}, {4, 1}, {5, 4}, {6, 1}}, twelve6},
      {"(3^14^35^36^1)'", {{3, 1}, {4, 3}, {5, 3}, {6, 1}}, twelve6},
      {"(3^14^35^36^1)''", {{3, 1}, {4, 3}, {5, 3}, {6, 1}}, twelve6},
      {"(3^25^6)'", {{3, 2}, {5, 6}}, twelve6},
      {"(3^25^6)''", {{3, 2}, {5, 6}}, twelve6},
      {"(4^45^4)'", {{4, 4}, {5, 4}}, twelve6},
      {"(4^45^4)''", {{4, 4}, {5, 4}}, twelve6},
      {"4^55^2", {{4, 5}, {5, 2}}, "polygon criterion bound 14 > 12"},
      {"3^14^35^3", {{3, 1}, {4, 3}, {5, 3}},
       "polygon criterion bound 15 > 12; its blow-ups only add points"},
  };
}

void check_annotations(const Seed& seed) {
  const auto walls = walls_of(seed.fan.dim, seed.fan.cones);
  if (walls.size() != seed.annotations.size()) {
    throw Error(ErrorCode::InvariantViolation,
                seed.name + ": " + std::to_string(seed.annotations.size()) + " labelled walls, " +
                    std::to_string(walls.size()) + " walls");
  }
  for (const auto& ann : seed.annotations) {
    auto it = std::find_if(walls.begin(), walls.end(), [&](const Wall& w) { return w.rays == ann.rays; });
    if (it == walls.end()) {
      throw Error(ErrorCode::InvariantViolation, seed.name + ": labelled wall is not a wall");
    }
    const auto ep = edge_parameters(seed.fan, *it);
    for (std::size_t i = 0; i < ann.labels.size(); ++i) {
      if (ep.coeffs[i] != ann.labels[i].value) {
        throw Error(ErrorCode::InvariantViolation,
                    seed.name + ": wall label " + ann.labels[i].value.str() + " at ray " +
                        seed.ray_names[ann.labels[i].ray] + " but computed " + ep.coeffs[i].str());
      }
    }
  }
}

}  // namespace smoothpoly
