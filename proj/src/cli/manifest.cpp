#include "homtwist/manifest.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace homtwist {

using Json = nlohmann::ordered_json;
using C3 = std::vector<std::vector<std::vector<Rational>>>;

std::string_view to_string(Expect e) {
  switch (e) {
    case Expect::Pass: return "pass";
    case Expect::Fail: return "fail";
    case Expect::Any: return "any";
  }
  return "?";
}

namespace {

// ---------------------------------------------------------------- parsing

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  raise(ErrorKind::SyntaxError, "at " + path + ": " + what);
}

const Json& need(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path, "missing field '" + key + "'");
  return *it;
}

std::size_t as_size(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) schema(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

Rational as_rational(const Json& j, const std::string& path) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  schema(path, "expected a rational literal \"p/q\" or an integer");
}

Mat as_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of rows");
  require_dims(j.size() == rows, path + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Mat m = zeros(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string p = path + "/" + std::to_string(r);
    if (!j[r].is_array()) schema(p, "expected a row array");
    require_dims(j[r].size() == cols, p + ": expected " + std::to_string(cols) + " entries, got " +
                                          std::to_string(j[r].size()));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = as_rational(j[r][c], p + "/" + std::to_string(c));
  }
  return m;
}

C3 as_c3(const Json& j, std::size_t n0, std::size_t n1, std::size_t n2, const std::string& path) {
  if (!j.is_array()) schema(path, "expected a nested array");
  require_dims(j.size() == n0, path + ": expected " + std::to_string(n0) + " entries");
  C3 out(n0);
  for (std::size_t i = 0; i < n0; ++i) {
    const Mat m = as_matrix(j[i], n1, n2, path + "/" + std::to_string(i));
    out[i].assign(n1, std::vector<Rational>(n2));
    for (std::size_t a = 0; a < n1; ++a)
      for (std::size_t b = 0; b < n2; ++b) out[i][a][b] = m(a, b);
  }
  return out;
}

Mat optional_alpha(const Json& j, std::size_t n, const std::string& path) {
  auto it = j.find("alpha");
  return it == j.end() ? identity(n) : as_matrix(*it, n, n, path + "/alpha");
}

Side as_side(const Json& j, const std::string& path) {
  const std::string s = as_string(j, path);
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  schema(path, "side must be \"left\" or \"right\"");
}

GalleryParams as_params(const Json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object of rational literals");
  GalleryParams out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = as_rational(it.value(), path + "/" + it.key());
  return out;
}

Object parse_object(const std::string& kind, const Json& j, const std::string& path) {
  if (kind == "hom_algebra") {
    const std::size_t n = as_size(need(j, "dim", path), path + "/dim");
    HomAlgebra a = HomAlgebra::from_constants(n, as_c3(need(j, "mul", path), n, n, n, path + "/mul"),
                                              optional_alpha(j, n, path));
    if (auto it = j.find("labels"); it != j.end()) {
      if (!it->is_array() || it->size() != n) schema(path + "/labels", "expected " + std::to_string(n) + " labels");
      a.labels.clear();
      for (const Json& l : *it) a.labels.push_back(as_string(l, path + "/labels"));
    }
    return a;
  }
  if (kind == "hom_coalgebra") {
    const std::size_t n = as_size(need(j, "dim", path), path + "/dim");
    return HomCoalgebra::from_constants(n, as_c3(need(j, "comul", path), n, n, n, path + "/comul"),
                                        optional_alpha(j, n, path));
  }
  if (kind == "hom_bialgebra") {
    const std::size_t n = as_size(need(j, "dim", path), path + "/dim");
    const Mat alpha = optional_alpha(j, n, path);
    HomBialgebra h(HomAlgebra::from_constants(n, as_c3(need(j, "mul", path), n, n, n, path + "/mul"), alpha),
                   HomCoalgebra::from_constants(n, as_c3(need(j, "comul", path), n, n, n, path + "/comul"), alpha));
    return h;
  }
  if (kind == "linear_map") {
    const std::size_t s = as_size(need(j, "source_dim", path), path + "/source_dim");
    const std::size_t t = as_size(need(j, "target_dim", path), path + "/target_dim");
    return LinearMap{s, t, as_matrix(need(j, "matrix", path), t, s, path + "/matrix")};
  }
  if (kind == "operator2") {
    const std::size_t n = as_size(need(j, "dim", path), path + "/dim");
    return Operator2(n, as_matrix(need(j, "matrix", path), n * n, n * n, path + "/matrix"));
  }
  if (kind == "operator3") {
    const std::size_t n = as_size(need(j, "dim", path), path + "/dim");
    return Operator3(n, as_matrix(need(j, "matrix", path), n * n * n, n * n * n, path + "/matrix"));
  }
  if (kind == "twisting_map") {
    const std::size_t a = as_size(need(j, "dim_a", path), path + "/dim_a");
    const std::size_t b = as_size(need(j, "dim_b", path), path + "/dim_b");
    return TwistingMapR(a, b, as_matrix(need(j, "matrix", path), a * b, a * b, path + "/matrix"));
  }
  if (kind == "action") {
    const Side side = as_side(need(j, "side", path), path + "/side");
    const std::size_t h = as_size(need(j, "acting_dim", path), path + "/acting_dim");
    const std::size_t m = as_size(need(j, "module_dim", path), path + "/module_dim");
    return ActionTable::from_constants(side, h, m, as_c3(need(j, "constants", path), h, m, m, path + "/constants"),
                                       optional_alpha(j, m, path));
  }
  if (kind == "coaction") {
    const Side side = as_side(need(j, "side", path), path + "/side");
    const std::size_t c = as_size(need(j, "coalgebra_dim", path), path + "/coalgebra_dim");
    const std::size_t m = as_size(need(j, "module_dim", path), path + "/module_dim");
    const C3 t = side == Side::Left ? as_c3(need(j, "constants", path), m, c, m, path + "/constants")
                                    : as_c3(need(j, "constants", path), m, m, c, path + "/constants");
    return CoactionTable::from_constants(side, c, m, t, optional_alpha(j, m, path));
  }
  raise(ErrorKind::UnknownName, "at " + path + ": unknown object kind '" + kind + "'");
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line, col = 1;
    else ++col;
  }
  return {line, col};
}

void check_name(const std::string& name, const std::string& path) {
  if (name.empty() || name.find('.') != std::string::npos) schema(path, "names must be non-empty and contain no '.'");
}

// ---------------------------------------------------------------- serialization

Json rat_json(const Rational& r) { return r.str(); }

Json mat_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(rat_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json c3_json(const C3& c) {
  Json out = Json::array();
  for (const auto& plane : c) {
    Json p = Json::array();
    for (const auto& row : plane) {
      Json r = Json::array();
      for (const Rational& x : row) r.push_back(rat_json(x));
      p.push_back(std::move(r));
    }
    out.push_back(std::move(p));
  }
  return out;
}

Json params_json(const GalleryParams& p) {
  Json out = Json::object();
  for (const auto& [k, v] : p) out[k] = rat_json(v);
  return out;
}

Json object_json(const Object& o) {
  Json j = Json::object();
  j["kind"] = std::string(kind_name(o));
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, HomAlgebra>) {
          j["dim"] = x.dim;
          j["mul"] = c3_json(x.constants());
          j["alpha"] = mat_json(x.alpha);
          if (x.labels != default_labels(x.dim)) j["labels"] = x.labels;
        } else if constexpr (std::is_same_v<T, HomCoalgebra>) {
          j["dim"] = x.dim;
          j["comul"] = c3_json(x.constants());
          j["alpha"] = mat_json(x.alpha);
        } else if constexpr (std::is_same_v<T, HomBialgebra>) {
          j["dim"] = x.dim();
          j["mul"] = c3_json(x.algebra.constants());
          j["comul"] = c3_json(x.coalgebra.constants());
          j["alpha"] = mat_json(x.alpha());
        } else if constexpr (std::is_same_v<T, LinearMap>) {
          j["source_dim"] = x.source_dim;
          j["target_dim"] = x.target_dim;
          j["matrix"] = mat_json(x.matrix);
        } else if constexpr (std::is_same_v<T, Operator2> || std::is_same_v<T, Operator3>) {
          j["dim"] = x.dim;
          j["matrix"] = mat_json(x.matrix);
        } else if constexpr (std::is_same_v<T, TwistingMapR>) {
          j["dim_a"] = x.dimA;
          j["dim_b"] = x.dimB;
          j["matrix"] = mat_json(x.matrix);
        } else if constexpr (std::is_same_v<T, ActionTable>) {
          j["side"] = std::string(to_string(x.side));
          j["acting_dim"] = x.acting_dim;
          j["module_dim"] = x.module_dim;
          j["constants"] = c3_json(x.constants());
          j["alpha"] = mat_json(x.alpha);
        } else if constexpr (std::is_same_v<T, CoactionTable>) {
          j["side"] = std::string(to_string(x.side));
          j["coalgebra_dim"] = x.coalgebra_dim;
          j["module_dim"] = x.module_dim;
          j["constants"] = c3_json(x.constants());
          j["alpha"] = mat_json(x.alpha);
        } else {
          raise(ErrorKind::WrongKind, "uq_params objects come from the gallery and are not serialized");
        }
      },
      o);
  return j;
}

// ---------------------------------------------------------------- evaluation

using Env = std::map<std::string, Object>;

struct Args {
  const Task& task;
  std::vector<const Object*> objs;

  const Object& at(std::size_t i) const { return *objs[i]; }

  [[noreturn]] void wrong(std::size_t i, std::string_view want) const {
    raise(ErrorKind::WrongKind, task.verb + " argument " + std::to_string(i + 1) + " ('" + task.args[i] + "') is " +
                                    std::string(kind_name(at(i))) + ", expected " + std::string(want));
  }

  template <class T>
  const T& get(std::size_t i) const {
    if (const T* p = std::get_if<T>(objs[i])) return *p;
    wrong(i, kind_name_of<T>());
  }

  const HomAlgebra& algebra(std::size_t i) const {
    if (const auto* p = std::get_if<HomAlgebra>(objs[i])) return *p;
    if (const auto* p = std::get_if<HomBialgebra>(objs[i])) return p->algebra;
    wrong(i, "hom_algebra");
  }

  const HomCoalgebra& coalgebra(std::size_t i) const {
    if (const auto* p = std::get_if<HomCoalgebra>(objs[i])) return *p;
    if (const auto* p = std::get_if<HomBialgebra>(objs[i])) return p->coalgebra;
    wrong(i, "hom_coalgebra");
  }

  const Mat& map(std::size_t i) const { return get<LinearMap>(i).matrix; }

  Rational param(const std::string& key, std::optional<Rational> fallback = std::nullopt) const {
    auto it = task.params.find(key);
    if (it != task.params.end()) return it->second;
    if (fallback) return *fallback;
    raise(ErrorKind::UnknownName, task.verb + " needs parameter '" + key + "'");
  }

  int bound(int fallback) const {
    const Rational b = param("bound", Rational(fallback));
    if (!b.is_integer() || b.sign() < 0) raise(ErrorKind::ParamConstraintViolation, "bound must be a natural number");
    return std::stoi(b.str());
  }
};

struct VerbResult {
  std::optional<CheckReport> report;
  std::vector<std::pair<std::string, Object>> outputs;  // single output uses an empty member name
};

struct Verb {
  std::string name;
  std::size_t arity;
  std::function<VerbResult(const Args&)> run;
};

VerbResult checked(CheckReport r) { return {std::move(r), {}}; }
VerbResult made(Object o) { return {std::nullopt, {{"", std::move(o)}}}; }
VerbResult made(std::vector<std::pair<std::string, Object>> outs) { return {std::nullopt, std::move(outs)}; }

bool objects_equal(const Object& a, const Object& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, HomAlgebra> || std::is_same_v<T, HomCoalgebra> ||
                      std::is_same_v<T, HomBialgebra> || std::is_same_v<T, ActionTable> ||
                      std::is_same_v<T, CoactionTable>) {
          return same_structure(x, y);
        } else if constexpr (std::is_same_v<T, UqParams>) {
          return x.q == y.q && x.lambda == y.lambda && x.xi == y.xi && x.l == y.l;
        } else {
          return x.matrix.rows() == y.matrix.rows() && x.matrix.cols() == y.matrix.cols() && equal(x.matrix, y.matrix);
        }
      },
      a);
}

const std::vector<Verb>& verbs() {
  using A = const Args&;
  static const std::vector<Verb> table = {
      // Checks.
      {"check_hom_algebra", 1, [](A a) { return checked(check_hom_algebra(a.algebra(0))); }},
      {"check_associative", 1, [](A a) { return checked(check_associative(a.algebra(0))); }},
      {"check_hom_coalgebra", 1, [](A a) { return checked(check_hom_coalgebra(a.coalgebra(0))); }},
      {"check_coassociative", 1, [](A a) { return checked(check_coassociative(a.coalgebra(0))); }},
      {"check_hom_bialgebra", 1, [](A a) { return checked(check_hom_bialgebra(a.get<HomBialgebra>(0))); }},
      {"check_algebra_morphism", 3,
       [](A a) { return checked(check_algebra_morphism(a.get<LinearMap>(0), a.algebra(1), a.algebra(2))); }},
      {"check_pseudotwistor", 4,
       [](A a) {
         return checked(check_pseudotwistor(a.algebra(0), a.get<Operator2>(1), a.get<Operator3>(2), a.get<Operator3>(3)));
       }},
      {"check_twistor", 2, [](A a) { return checked(check_twistor(a.algebra(0), a.get<Operator2>(1))); }},
      {"check_hom_pseudotwistor", 4,
       [](A a) {
         return checked(
             check_hom_pseudotwistor(a.algebra(0), a.get<Operator2>(1), a.get<Operator3>(2), a.get<Operator3>(3)));
       }},
      {"check_hom_twistor", 2, [](A a) { return checked(check_hom_twistor(a.algebra(0), a.get<Operator2>(1))); }},
      {"check_alpha_pseudotwistor", 5,
       [](A a) {
         return checked(check_alpha_pseudotwistor(a.algebra(0), a.map(1), a.get<Operator2>(2), a.get<Operator3>(3),
                                                  a.get<Operator3>(4)));
       }},
      {"check_yau_compat", 5,
       [](A a) {
         return checked(
             check_yau_compat(a.algebra(0), a.map(1), a.get<Operator2>(2), a.get<Operator3>(3), a.get<Operator3>(4)));
       }},
      {"check_twisting_map", 3,
       [](A a) { return checked(check_twisting_map(a.algebra(0), a.algebra(1), a.get<TwistingMapR>(2))); }},
      {"check_hom_twisting_map", 3,
       [](A a) { return checked(check_hom_twisting_map(a.algebra(0), a.algebra(1), a.get<TwistingMapR>(2))); }},
      {"check_braid", 3,
       [](A a) {
         return checked(check_braid(a.get<TwistingMapR>(0), a.get<TwistingMapR>(1), a.get<TwistingMapR>(2)));
       }},
      {"check_alphaAB_twisting_map", 5,
       [](A a) {
         return checked(
             check_alphaAB_twisting_map(a.algebra(0), a.algebra(1), a.map(2), a.map(3), a.get<TwistingMapR>(4)));
       }},
      {"check_deform_compat_ttp", 5,
       [](A a) {
         return checked(check_deform_compat_ttp(a.algebra(0), a.algebra(1), a.map(2), a.map(3), a.get<TwistingMapR>(4)));
       }},
      {"check_commutes", 3,
       [](A a) { return checked(check_commutes(a.get<TwistingMapR>(0), a.map(1), a.map(2))); }},
      {"check_module", 2, [](A a) { return checked(check_module(a.algebra(0), a.get<ActionTable>(1))); }},
      {"check_module_hom_algebra", 3,
       [](A a) {
         return checked(check_module_hom_algebra(a.get<HomBialgebra>(0), a.algebra(1), a.get<ActionTable>(2)));
       }},
      {"check_comodule", 2, [](A a) { return checked(check_comodule(a.coalgebra(0), a.get<CoactionTable>(1))); }},
      {"check_bicomodule", 3,
       [](A a) {
         return checked(check_bicomodule(a.coalgebra(0), a.get<CoactionTable>(1), a.get<CoactionTable>(2)));
       }},
      {"check_comodule_hom_algebra", 3,
       [](A a) {
         return checked(check_comodule_hom_algebra(a.get<HomBialgebra>(0), a.algebra(1), a.get<CoactionTable>(2)));
       }},
      {"check_yetter_drinfeld", 3,
       [](A a) {
         return checked(
             check_yetter_drinfeld(a.get<HomBialgebra>(0), a.get<ActionTable>(1), a.get<CoactionTable>(2)));
       }},
      {"check_smash_twist_compat", 5,
       [](A a) {
         return checked(check_smash_twist_compat(a.get<HomBialgebra>(0), a.algebra(1), a.get<ActionTable>(2), a.map(3),
                                                 a.map(4)));
       }},
      {"check_uq_module_hom_algebra", 1,
       [](A a) { return checked(check_uq_module_hom_algebra(a.get<UqParams>(0), a.bound(2))); }},
      {"verify_example32", 1, [](A a) { return checked(verify_example32(a.get<UqParams>(0), a.bound(2))); }},
      {"equal", 2,
       [](A a) {
         CheckReport r;
         if (!objects_equal(a.at(0), a.at(1)))
           r.add_failure({"equal", {}, {}, {}, a.task.args[0] + " and " + a.task.args[1] + " differ"});
         return checked(std::move(r));
       }},
      // Constructions.
      {"yau_twist_algebra", 2, [](A a) { return made(yau_twist_algebra(a.algebra(0), a.map(1))); }},
      {"yau_twist_coalgebra", 2, [](A a) { return made(yau_twist_coalgebra(a.coalgebra(0), a.map(1))); }},
      {"yau_twist_bialgebra", 2, [](A a) { return made(yau_twist_bialgebra(a.get<HomBialgebra>(0), a.map(1))); }},
      {"tensor_algebra", 2, [](A a) { return made(tensor_algebra(a.algebra(0), a.algebra(1))); }},
      {"deform", 2, [](A a) { return made(deform(a.algebra(0), a.get<Operator2>(1))); }},
      {"deform_alpha", 3, [](A a) { return made(deform_alpha(a.algebra(0), a.map(1), a.get<Operator2>(2))); }},
      {"yau_operator", 1,
       [](A a) {
         TwistorTriple t = yau_operator(a.map(0));
         return made({{"T", t.T}, {"C1", t.C1}, {"C2", t.C2}});
       }},
      {"ttp", 3, [](A a) { return made(ttp(a.algebra(0), a.algebra(1), a.get<TwistingMapR>(2))); }},
      {"hom_ttp", 3, [](A a) { return made(hom_ttp(a.algebra(0), a.algebra(1), a.get<TwistingMapR>(2))); }},
      {"twistor_from_R", 3,
       [](A a) { return made(twistor_from_R(a.algebra(0), a.algebra(1), a.get<TwistingMapR>(2))); }},
      {"hom_twistor_from_R", 3,
       [](A a) { return made(hom_twistor_from_R(a.algebra(0), a.algebra(1), a.get<TwistingMapR>(2))); }},
      {"iterated_ttp", 6,
       [](A a) {
         IteratedResult r = iterated_ttp(a.algebra(0), a.algebra(1), a.algebra(2), a.get<TwistingMapR>(3),
                                         a.get<TwistingMapR>(4), a.get<TwistingMapR>(5));
         return made({{"algebra", r.algebra}, {"right_nested", r.right_nested}, {"P1", r.P1}, {"P2", r.P2}});
       }},
      {"clifford", 2,
       [](A a) {
         CliffordResult r = clifford(a.algebra(0), {a.param("q"), a.map(1)});
         return made({{"algebra", r.algebra}, {"R", r.R}});
       }},
      {"alphaAB_ttp", 5,
       [](A a) {
         AlphaTtpResult r = alphaAB_ttp(a.algebra(0), a.algebra(1), a.map(2), a.map(3), a.get<TwistingMapR>(4));
         return made({{"algebra", r.algebra}, {"T", r.T}, {"C1", r.C1}, {"C2", r.C2}});
       }},
      {"alphaAB_from_classical", 3,
       [](A a) { return made(alphaAB_from_classical(a.get<TwistingMapR>(0), a.map(1), a.map(2))); }},
      {"yau_twist_module_algebra", 5,
       [](A a) {
         TwistedModuleAlgebra t = yau_twist_module_algebra(a.get<HomBialgebra>(0), a.algebra(1), a.get<ActionTable>(2),
                                                           a.map(3), a.map(4));
         return made({{"H", t.H}, {"A", t.A}, {"act", t.act}});
       }},
      {"smash_left", 3,
       [](A a) {
         SmashResult r = smash_left(a.algebra(0), a.get<HomBialgebra>(1), a.get<ActionTable>(2));
         return made({{"algebra", r.algebra}, {"R", r.R}});
       }},
      {"smash_right", 3,
       [](A a) {
         SmashResult r = smash_right(a.get<HomBialgebra>(0), a.algebra(1), a.get<ActionTable>(2));
         return made({{"algebra", r.algebra}, {"R", r.R}});
       }},
      {"smash_two_sided", 5,
       [](A a) {
         TwoSidedSmash r = smash_two_sided(a.algebra(0), a.get<HomBialgebra>(1), a.algebra(2), a.get<ActionTable>(3),
                                           a.get<ActionTable>(4));
         return made({{"algebra", r.iterated.algebra},
                      {"right_nested", r.iterated.right_nested},
                      {"R1", r.R1},
                      {"R2", r.R2},
                      {"R3", r.R3}});
       }},
      {"coaction_rho_smash", 3,
       [](A a) { return made(coaction_rho_smash(a.algebra(0), a.get<HomBialgebra>(1), a.get<ActionTable>(2))); }},
      {"coaction_lambda_smash", 4,
       [](A a) {
         return made(coaction_lambda_smash(a.algebra(0), a.get<HomBialgebra>(1), a.get<ActionTable>(2),
                                           a.get<CoactionTable>(3)));
       }},
      {"coaction_lambda_right_smash", 3,
       [](A a) {
         return made(coaction_lambda_right_smash(a.get<HomBialgebra>(0), a.algebra(1), a.get<ActionTable>(2)));
       }},
  };
  return table;
}

const Verb* find_verb(const std::string& name) {
  for (const Verb& v : verbs())
    if (v.name == name) return &v;
  return nullptr;
}

// Errors that describe the manifest wiring rather than a mathematical outcome.
bool is_semantic(ErrorKind k) {
  return k == ErrorKind::UnknownName || k == ErrorKind::WrongKind || k == ErrorKind::DimensionMismatch ||
         k == ErrorKind::DuplicateName;
}

void load_objects(const Manifest& m, Env& env) {
  for (const ObjectDef& def : m.objects) {
    if (!def.is_gallery()) {
      env[def.name] = def.value;
      continue;
    }
    Bundle b = build_gallery(def.gallery, def.params);
    for (auto& [member, obj] : b.objects) env[def.name + "." + member] = std::move(obj);
  }
}

Args resolve(const Task& t, const Env& env) {
  Args a{t, {}};
  for (const std::string& name : t.args) {
    auto it = env.find(name);
    if (it == env.end()) raise(ErrorKind::UnknownName, t.verb + ": no object named '" + name + "'");
    a.objs.push_back(&it->second);
  }
  return a;
}

void bind(const Task& t, VerbResult& r, Env& env) {
  if (t.bind.empty()) return;
  for (auto& [member, obj] : r.outputs) env[member.empty() ? t.bind : t.bind + "." + member] = std::move(obj);
}

std::string call_text(const Task& t) {
  std::string s = t.verb + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) s += (i ? ", " : "") + t.args[i];
  for (const auto& [k, v] : t.params) s += (s.back() == '(' ? "" : ", ") + k + "=" + v.str();
  s += ")";
  if (!t.bind.empty()) s += " as " + t.bind;
  return s;
}

std::string indent(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) out += "    " + line + "\n";
  return out;
}

std::string format_entry(const HomAlgebra& a, std::size_t i, std::size_t j) {
  std::string out;
  for (std::size_t k = 0; k < a.dim; ++k) {
    const Rational& c = a.constant(i, j, k);
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    std::string term = (mag == Rational(1) ? "" : mag.str() + " ") + a.label(k);
    if (out.empty()) out = (c.sign() < 0 ? "-" : "") + term;
    else out += (c.sign() < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++n;
  return n;
}

}  // namespace

Manifest parse_manifest(std::string_view text) {
  Json root;
  // Duplicate keys would otherwise be silently merged by the parser.
  std::vector<std::set<std::string>> open_keys;
  std::string duplicate;
  const auto track = [&](int, nlohmann::json::parse_event_t ev, Json& parsed) {
    using E = nlohmann::json::parse_event_t;
    if (ev == E::object_start) open_keys.emplace_back();
    else if (ev == E::object_end) open_keys.pop_back();
    else if (ev == E::key && !open_keys.empty() && !open_keys.back().insert(parsed.get<std::string>()).second &&
             duplicate.empty())
      duplicate = parsed.get<std::string>();
    return true;
  };
  try {
    root = Json::parse(text.begin(), text.end(), track);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte);
    std::string msg = e.what();
    // Drop the library prefix "[json.exception...] parse error at line L, column C: ".
    if (auto p = msg.find(", column "); p != std::string::npos)
      if (auto q = msg.find(": ", p); q != std::string::npos) msg = msg.substr(q + 2);
    raise(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
  if (!duplicate.empty()) raise(ErrorKind::DuplicateName, "key '" + duplicate + "' appears twice in one object");
  if (!root.is_object()) schema("/", "manifest must be a JSON object");

  Manifest m;
  std::set<std::string> names;
  if (auto it = root.find("objects"); it != root.end()) {
    if (!it->is_object()) schema("/objects", "expected an object keyed by name");
    for (auto o = it->begin(); o != it->end(); ++o) {
      const std::string path = "/objects/" + o.key();
      const Json& j = o.value();
      ObjectDef def;
      def.name = o.key();
      check_name(def.name, path);
      names.insert(def.name);
      const std::string kind = as_string(need(j, "kind", path), path + "/kind");
      if (kind == "gallery") {
        def.gallery = as_string(need(j, "name", path), path + "/name");
        if (auto p = j.find("params"); p != j.end()) def.params = as_params(*p, path + "/params");
      } else {
        def.value = parse_object(kind, j, path);
      }
      m.objects.push_back(std::move(def));
    }
  }
  if (auto it = root.find("tasks"); it != root.end()) {
    if (!it->is_array()) schema("/tasks", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "/tasks/" + std::to_string(i);
      const Json& j = (*it)[i];
      Task t;
      t.verb = as_string(need(j, "verb", path), path + "/verb");
      const Verb* v = find_verb(t.verb);
      if (!v) raise(ErrorKind::UnknownName, "at " + path + ": unknown verb '" + t.verb + "'");
      const Json& args = need(j, "args", path);
      if (!args.is_array()) schema(path + "/args", "expected an array of names");
      for (const Json& a : args) t.args.push_back(as_string(a, path + "/args"));
      if (t.args.size() != v->arity)
        schema(path + "/args", t.verb + " takes " + std::to_string(v->arity) + " argument(s), got " +
                                   std::to_string(t.args.size()));
      for (const std::string& a : t.args) {
        const std::string head = a.substr(0, a.find('.'));
        if (!names.count(head))
          raise(ErrorKind::UnknownName, "at " + path + ": '" + a + "' is not defined before use");
      }
      if (auto p = j.find("params"); p != j.end()) t.params = as_params(*p, path + "/params");
      if (auto p = j.find("as"); p != j.end()) {
        t.bind = as_string(*p, path + "/as");
        check_name(t.bind, path + "/as");
        if (!names.insert(t.bind).second) raise(ErrorKind::DuplicateName, "name '" + t.bind + "' bound twice");
      }
      if (auto p = j.find("expect"); p != j.end()) {
        const std::string e = as_string(*p, path + "/expect");
        if (e == "pass") t.expect = Expect::Pass;
        else if (e == "fail") t.expect = Expect::Fail;
        else if (e == "any") t.expect = Expect::Any;
        else schema(path + "/expect", "expect must be pass, fail or any");
      }
      m.tasks.push_back(std::move(t));
    }
  }
  for (auto it = root.begin(); it != root.end(); ++it)
    if (it.key() != "objects" && it.key() != "tasks") schema("/" + it.key(), "unknown top-level field");
  return m;
}

std::string serialize_manifest(const Manifest& m) {
  Json root = Json::object();
  Json objects = Json::object();
  for (const ObjectDef& def : m.objects) {
    if (def.is_gallery()) {
      Json j = Json::object();
      j["kind"] = "gallery";
      j["name"] = def.gallery;
      j["params"] = params_json(def.params);
      objects[def.name] = std::move(j);
    } else {
      objects[def.name] = object_json(def.value);
    }
  }
  Json tasks = Json::array();
  for (const Task& t : m.tasks) {
    Json j = Json::object();
    j["verb"] = t.verb;
    j["args"] = t.args;
    if (!t.params.empty()) j["params"] = params_json(t.params);
    if (!t.bind.empty()) j["as"] = t.bind;
    j["expect"] = std::string(to_string(t.expect));
    tasks.push_back(std::move(j));
  }
  root["objects"] = std::move(objects);
  root["tasks"] = std::move(tasks);
  return root.dump(2) + "\n";
}

bool operator==(const Manifest& a, const Manifest& b) { return serialize_manifest(a) == serialize_manifest(b); }

RunResult run_manifest(const Manifest& m) {
  Env env;
  load_objects(m, env);
  RunResult result;
  std::ostringstream out;
  std::size_t met = 0;
  for (std::size_t i = 0; i < m.tasks.size(); ++i) {
    const Task& t = m.tasks[i];
    const Verb* v = find_verb(t.verb);
    if (!v) raise(ErrorKind::UnknownName, "unknown verb '" + t.verb + "'");
    const Args args = resolve(t, env);
    bool passed = false;
    std::string detail;
    try {
      VerbResult r = v->run(args);
      passed = !r.report || r.report->passed();
      if (r.report && !passed) detail = r.report->format();
      bind(t, r, env);
    } catch (const Error& e) {
      if (is_semantic(e.kind())) throw;
      detail = std::string(e.what()) + "\n";
    }
    const bool ok = t.expect == Expect::Any || passed == (t.expect == Expect::Pass);
    met += ok;
    out << "[" << i + 1 << "] " << call_text(t) << ": " << (passed ? "pass" : "fail") << " (expected "
        << to_string(t.expect) << ") " << (ok ? "OK" : "MISMATCH") << "\n";
    if (!passed) out << indent(detail);
  }
  out << met << "/" << m.tasks.size() << " tasks met their expectation\n";
  result.exit_code = met == m.tasks.size() ? 0 : 1;
  result.report = out.str();
  return result;
}

std::string product_table(const HomAlgebra& a) {
  std::vector<std::vector<std::string>> cells(a.dim + 1, std::vector<std::string>(a.dim + 1));
  for (std::size_t i = 0; i < a.dim; ++i) {
    cells[0][i + 1] = a.label(i);
    cells[i + 1][0] = a.label(i);
    for (std::size_t j = 0; j < a.dim; ++j) cells[i + 1][j + 1] = format_entry(a, i, j);
  }
  std::vector<std::size_t> width(a.dim + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      const std::string& s = cells[r][c];
      out << s;
      if (c + 1 < cells[r].size()) out << std::string(width[c] - display_width(s), ' ') << (c == 0 ? " | " : "   ");
    }
    out << "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c + 1 < width.size() ? 3 : 0);
      out << std::string(total, '-') << "\n";
    }
  }
  return out.str();
}

std::string product_table(const Manifest& m, const std::string& name) {
  Env env;
  load_objects(m, env);
  for (const Task& t : m.tasks) {
    if (env.count(name)) break;
    const Verb* v = find_verb(t.verb);
    if (!v) raise(ErrorKind::UnknownName, "unknown verb '" + t.verb + "'");
    try {
      VerbResult r = v->run(resolve(t, env));
      bind(t, r, env);
    } catch (const Error& e) {
      if (is_semantic(e.kind())) throw;
    }
  }
  auto it = env.find(name);
  if (it == env.end()) raise(ErrorKind::UnknownName, "no object named '" + name + "'");
  if (const auto* a = std::get_if<HomAlgebra>(&it->second)) return product_table(*a);
  if (const auto* h = std::get_if<HomBialgebra>(&it->second)) return product_table(h->algebra);
  raise(ErrorKind::WrongKind, "'" + name + "' is " + std::string(kind_name(it->second)) + ", not an algebra");
}

std::vector<std::pair<std::string, std::size_t>> manifest_verbs() {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const Verb& v : verbs()) out.emplace_back(v.name, v.arity);
  return out;
}

int exit_code_for(const Error& e, bool during_parse) {
  if (!during_parse) return 3;
  switch (e.kind()) {
    case ErrorKind::SyntaxError:
    case ErrorKind::MalformedRational:
    case ErrorKind::ZeroDenominator:
      return 2;
    default:
      return 3;
  }
}

CheckOutcome check_manifest_text(std::string_view text) {
  Manifest m;
  try {
    m = parse_manifest(text);
  } catch (const Error& e) {
    return {exit_code_for(e, true), std::string("error: ") + e.what() + "\n"};
  }
  try {
    RunResult r = run_manifest(m);
    return {r.exit_code, r.report};
  } catch (const Error& e) {
    return {exit_code_for(e, false), std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace homtwist
