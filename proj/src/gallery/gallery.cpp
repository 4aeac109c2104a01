#include "homtwist/gallery.hpp"

#include <algorithm>
#include <functional>

namespace homtwist {

const Object& Bundle::get(const std::string& name) const {
  for (const auto& [n, o] : objects)
    if (n == name) return o;
  raise(ErrorKind::UnknownName, "gallery bundle " + key + " has no object " + name);
}

namespace {

using Constants = std::vector<std::vector<std::vector<Rational>>>;

Constants zero_constants(std::size_t n) { return Constants(n, std::vector(n, std::vector<Rational>(n))); }

// Reads declared parameters with defaults and rejects undeclared names.
class Params {
 public:
  Params(const std::string& key, const GalleryParams& given, std::map<std::string, Rational> defaults)
      : values_(std::move(defaults)) {
    for (const auto& [name, v] : given) {
      if (!values_.count(name)) raise(ErrorKind::UnknownName, "gallery key " + key + " has no parameter " + name);
      values_[name] = v;
    }
  }
  const Rational& operator[](const std::string& name) const { return values_.at(name); }
  long integer(const std::string& name) const {
    const Rational& v = values_.at(name);
    if (!v.is_integer()) raise(ErrorKind::ParamConstraintViolation, name + " must be an integer");
    return std::stol(v.numerator());
  }

 private:
  std::map<std::string, Rational> values_;
};

void require(bool ok, const std::string& constraint) {
  if (!ok) raise(ErrorKind::ParamConstraintViolation, constraint);
}

LinearMap endo(const Mat& m) { return LinearMap{std::size_t(m.rows()), std::size_t(m.cols()), m}; }

Mat diag(std::initializer_list<Rational> d) {
  Mat m = zeros(d.size(), d.size());
  std::size_t i = 0;
  for (const Rational& x : d) m(i, i) = x, ++i;
  return m;
}

// Image list of e_b⊗e_a for 2x2 twisting maps, in the order e1⊗e1, e1⊗e2, e2⊗e1, e2⊗e2.
TwistingMapR two_by_two(const std::vector<std::vector<Rational>>& images) {
  TwistingMapR R(2, 2, zeros(4, 4));
  for (std::size_t in = 0; in < 4; ++in) R.set_image(in / 2, in % 2, images[in]);
  return R;
}

HomAlgebra example_2dim_lambda2_zero(const Params& p) {
  if (p["lambda2"] != Rational(0)) raise(ErrorKind::ParamConstraintViolation, "lambda2 = 0");
  require(!p["lambda1"].is_zero(), "lambda1 != 0");
  return example_2dim(p["a"], p["lambda1"], 0);
}

Bundle ttp_k2_lambda(const Params& p) {
  const Rational l = p["lambda"], m = l - 1, o = 1 - l;
  Bundle b{"ttp_k2_lambda", "paper", {}};
  const HomAlgebra A = k2_algebra();
  const TwistingMapR R = two_by_two({{l, l, l, m}, {o, -l, o, o}, {o, o, -l, o}, {m, l, l, l}});
  b.objects = {{"A", A}, {"B", A}, {"R", R}, {"product", ttp(A, A, R)}};
  return b;
}

Bundle homalg_2dim(const Params& p) {
  Bundle b{"homalg_2dim", "paper", {}};
  b.objects = {{"D", example_2dim(p["a"], p["lambda1"], p["lambda2"])}};
  return b;
}

Bundle homtwistor_2dim(const Params& p) {
  const Rational a = p["a"], l1 = p["lambda1"], l2 = p["lambda2"];
  const HomAlgebra D = example_2dim(a, l1, l2);
  const Rational t = l1 / (1 - l2);
  // Columns e1⊗e1, e1⊗e2, e2⊗e1, e2⊗e2.
  Mat T = zeros(4, 4);
  T(0, 0) = 1;
  T(0, 1) = t;
  T(2, 2) = 1;
  T(2, 3) = t;
  const Operator2 op(2, T);
  Constants c = zero_constants(2);
  c[0][0] = {a, 0};
  c[0][1] = {t * a, 0};
  c[1][0] = {l1 * a, l2 * a};
  c[1][1] = {t * a * l1, t * a * l2};
  HomAlgebra displayed = HomAlgebra::from_constants(2, c, D.alpha);
  displayed.provenance = "homtwistor_2dim.displayed";
  Bundle b{"homtwistor_2dim", "paper", {}};
  b.objects = {{"D", D}, {"T", op}, {"DT", deform(D, op, Claim::HomTwistor)}, {"DT_displayed", displayed}};
  return b;
}

Bundle homtwist_R(const Params& p, bool second) {
  const HomAlgebra D = example_2dim_lambda2_zero(p);
  const Rational l1 = p["lambda1"], a1 = p["a1"], a2 = p["a2"], a3 = p["a3"], a4 = p["a4"], a5 = p["a5"];
  const Rational h = (2 * l1).inverse();
  const Rational s = second ? Rational(1) : Rational(0);
  const Rational two_l1_s = 2 * l1 * s;
  const TwistingMapR R = two_by_two({
      {s, 0, 0, 0},
      {a1, a2, s - a2 - a1 / l1, 0},
      {a3, -h * (a1 + a3 - a4 + a5 + 2 * a2 * l1 - two_l1_s), h * (a1 - a3 - a4 + a5 + 2 * a2 * l1), 0},
      {l1 / 2 * (a1 + a3 - a4 - a5), a4, a5, -h * (a1 + a3 + a4 + a5 - two_l1_s)},
  });
  Bundle b{second ? "homtwist_R2" : "homtwist_R1", "paper", {}};
  b.objects = {{"D", D}, {"R", R}, {"product", hom_ttp(D, D, R)}};
  return b;
}

Bundle homtwist_Dk2(const Params& p) {
  const HomAlgebra D = example_2dim_lambda2_zero(p);
  const Rational l1 = p["lambda1"], a1 = p["a1"], a2 = p["a2"];
  const HomAlgebra K2 = k2_algebra("f");
  const TwistingMapR R = two_by_two({
      {0, 0, 0, 0},
      {a1, a2, -a1 / l1, -a2 / l1},
      {0, 0, 0, 0},
      {a1 * l1, a2 * l1, -a1, -a2},
  });
  Bundle b{"homtwist_Dk2", "paper", {}};
  b.objects = {{"D", D}, {"K2", K2}, {"R", R}, {"product", hom_ttp(D, K2, R)}};
  return b;
}

Bundle clifford_bundle(const Params& p) {
  require(!p["q"].is_zero(), "q != 0");
  const Mat swap = from_rows({{0, 1}, {1, 0}});
  HomAlgebra A = yau_twist_algebra(k2_algebra(), swap);
  const CliffordResult res = clifford(A, {p["q"], swap});
  Bundle b{"clifford", "paper", {}};
  b.objects = {{"A", A}, {"sigma", endo(swap)}, {"C", clifford_algebra(p["q"])}, {"R", res.R}, {"Abar", res.algebra}};
  return b;
}

Bundle sweedler_bundle(const Params& p) {
  const Rational c = p["c"];
  require(!c.is_zero(), "c != 0");
  const HomBialgebra H = sweedler_h4();
  const HomAlgebra A = dual_numbers();
  HomAlgebra C = dual_numbers();
  C.provenance = "k[y]/(y^2) right";

  // Basis of H: 1, g, x, gx; basis of A and C: 1, y.
  Constants t = zero_constants(2);
  t.assign(4, std::vector(2, std::vector<Rational>(2)));
  t[0][0] = {1, 0};
  t[0][1] = {0, 1};
  t[1][0] = {1, 0};
  t[1][1] = {0, -1};
  t[2][1] = {1, 0};
  t[3][1] = {1, 0};
  const ActionTable act = ActionTable::from_constants(Side::Left, 4, 2, t, identity(2));
  t[3][1] = {-1, 0};
  const ActionTable actR = ActionTable::from_constants(Side::Right, 4, 2, t, identity(2));

  const Mat alphaH = diag({1, 1, c, c}), alphaA = diag({1, c.inverse()});
  const TwistedModuleAlgebra left = yau_twist_module_algebra(H, A, act, alphaH, alphaA);
  const TwistedModuleAlgebra right = yau_twist_module_algebra(H, C, actR, alphaH, alphaA);

  Bundle b{"sweedler_h4", "auxiliary", {}};
  b.objects = {{"H", H},           {"A", A},           {"act", act},          {"C", C},
               {"actR", actR},     {"alphaH", endo(alphaH)}, {"alphaA", endo(alphaA)}, {"alphaC", endo(alphaA)},
               {"Ht", left.H},     {"At", left.A},     {"act_t", left.act},   {"Ct", right.A},
               {"actR_t", right.act}};
  return b;
}

Bundle group_bundle(const Params& p) {
  const long n = p.integer("n");
  require(n >= 1, "n >= 1");
  const HomBialgebra H = group_bialgebra(std::size_t(n));
  const std::size_t d = std::size_t(n);
  const ActionTable triv_act(Side::Left, d, d, kron(Mat::Ones(1, d), identity(d)), identity(d));
  Mat co = zeros(d * d, d);
  for (std::size_t a = 0; a < d; ++a) co(a, a) = 1;  // a ↦ 1⊗a
  const CoactionTable triv_co(Side::Left, d, d, co, identity(d));
  Bundle b{"group_algebra", "auxiliary", {}};
  b.objects = {{"H", H}, {"A", H.algebra}, {"triv_act", triv_act}, {"triv_co", triv_co}};
  return b;
}

Bundle uq_bundle(const Params& p) {
  UqParams u{p["q"], p["lambda"], p["xi"], int(p.integer("l"))};
  const Rational& q = u.q;
  require(!q.is_zero() && q != Rational(1) && q != Rational(-1), "q not in {0, 1, -1}");
  u.validate();
  Bundle b{"uq_setup", "paper", {}};
  b.objects = {{"params", u}};
  return b;
}

Bundle alpha_ttp_flip(const Params& p) {
  require(!p["q"].is_zero(), "q != 0");
  const HomAlgebra A = k2_algebra(), B = clifford_algebra(p["q"]);
  const Mat alphaA = from_rows({{0, 1}, {1, 0}}), alphaB = diag({1, -1});
  const TwistingMapR P = flip(2, 2);
  const TwistingMapR R = alphaAB_from_classical(P, alphaA, alphaB);
  const AlphaTtpResult res = alphaAB_ttp(A, B, alphaA, alphaB, R);
  Bundle b{"alpha_ttp_flip", "paper", {}};
  b.objects = {{"A", A},     {"B", B},   {"alphaA", endo(alphaA)}, {"alphaB", endo(alphaB)},
               {"P", P},     {"R", R},   {"product", res.algebra}, {"T", res.T},
               {"C1", res.C1}, {"C2", res.C2},
               {"expected", yau_twist_algebra(tensor_algebra(A, B), kron(alphaA, alphaB))}};
  return b;
}

Bundle alpha_ttp_clifford(const Params& p) {
  require(!p["q"].is_zero(), "q != 0");
  const HomAlgebra A = k2_algebra(), B = clifford_algebra(p["q"]);
  const Mat sigma = from_rows({{0, 1}, {1, 0}});
  TwistingMapR R(2, 2, zeros(4, 4));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t s = 0; s < 2; ++s) {
      R.matrix(s * 2 + 0, 0 * 2 + a) = sigma(s, a);  // 1⊗a ↦ σ(a)⊗1
      R.matrix(a * 2 + 1, 1 * 2 + a) = 1;              // v⊗a ↦ a⊗v
    }
  const AlphaTtpResult res = alphaAB_ttp(A, B, sigma, identity(2), R);
  const HomAlgebra Abar = clifford(A, {p["q"], sigma}).algebra;
  const Mat sigma_bar = kron(sigma, identity(2));
  Bundle b{"alpha_ttp_clifford", "paper", {}};
  b.objects = {{"A", A},       {"B", B},       {"sigma", endo(sigma)},        {"alphaB", endo(identity(2))},
               {"R", R},       {"product", res.algebra}, {"Abar", Abar},    {"sigma_bar", endo(sigma_bar)},
               {"expected", yau_twist_algebra(Abar, sigma_bar)}};
  return b;
}

struct Entry {
  std::map<std::string, Rational> defaults;
  std::function<Bundle(const Params&)> build;
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> r = {
      {"ttp_k2_lambda", {{{"lambda", 2}}, ttp_k2_lambda}},
      {"homalg_2dim", {{{"a", 1}, {"lambda1", 1}, {"lambda2", 2}}, homalg_2dim}},
      {"homtwistor_2dim", {{{"a", 1}, {"lambda1", 1}, {"lambda2", 2}}, homtwistor_2dim}},
      {"homtwist_R1",
       {{{"a", 1}, {"lambda1", 1}, {"lambda2", 0}, {"a1", 0}, {"a2", 0}, {"a3", 0}, {"a4", 0}, {"a5", 0}},
        [](const Params& p) { return homtwist_R(p, false); }}},
      {"homtwist_R2",
       {{{"a", 1}, {"lambda1", 1}, {"lambda2", 0}, {"a1", 0}, {"a2", 0}, {"a3", 0}, {"a4", 0}, {"a5", 0}},
        [](const Params& p) { return homtwist_R(p, true); }}},
      {"homtwist_Dk2", {{{"a", 1}, {"lambda1", 1}, {"lambda2", 0}, {"a1", 0}, {"a2", 0}}, homtwist_Dk2}},
      {"clifford", {{{"q", 2}}, clifford_bundle}},
      {"sweedler_h4", {{{"c", 1}}, sweedler_bundle}},
      {"group_algebra", {{{"n", 2}}, group_bundle}},
      {"uq_setup", {{{"q", 2}, {"lambda", 3}, {"xi", 5}, {"l", 0}}, uq_bundle}},
      {"alpha_ttp_flip", {{{"q", 2}}, alpha_ttp_flip}},
      {"alpha_ttp_clifford", {{{"q", 2}}, alpha_ttp_clifford}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& gallery_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, e] : registry()) k.push_back(name);
    return k;
  }();
  return keys;
}

Bundle build_gallery(const std::string& key, const GalleryParams& params) {
  const auto it = registry().find(key);
  if (it == registry().end()) raise(ErrorKind::UnknownName, "unknown gallery key " + key);
  Bundle b = it->second.build(Params(key, params, it->second.defaults));
  for (auto& [name, o] : b.objects)
    if (auto* a = std::get_if<HomAlgebra>(&o); a && a->provenance.empty()) a->provenance = key + "." + name;
  return b;
}

HomAlgebra k2_algebra(const std::string& prefix) {
  Constants c = zero_constants(2);
  c[0][0] = {1, 0};
  c[1][1] = {0, 1};
  HomAlgebra A = HomAlgebra::from_constants(2, c, identity(2));
  A.labels = {prefix + "1", prefix + "2"};
  A.provenance = "k^2";
  return A;
}

HomAlgebra dual_numbers() {
  Constants c = zero_constants(2);
  c[0][0] = {1, 0};
  c[0][1] = {0, 1};
  c[1][0] = {0, 1};
  HomAlgebra A = HomAlgebra::from_constants(2, c, identity(2));
  A.labels = {"1", "y"};
  A.provenance = "k[y]/(y^2)";
  return A;
}

HomAlgebra example_2dim(const Rational& a, const Rational& l1, const Rational& l2) {
  require(l2 != Rational(1), "lambda2 != 1");
  require(!a.is_zero(), "a != 0");
  const Rational d = 1 - l2;
  Constants c = zero_constants(2);
  c[0][0] = {a, 0};
  c[0][1] = c[1][0] = {l1 * a, l2 * a};
  c[1][1] = {l1 * l1 * (1 - 2 * l2) * a / (d * d), 2 * l1 * l2 * a / d};
  HomAlgebra D = HomAlgebra::from_constants(2, c, from_rows({{1, l1}, {0, l2}}));
  D.provenance = "D(" + a.str() + "," + l1.str() + "," + l2.str() + ")";
  return D;
}

HomBialgebra sweedler_h4() {
  // 0 = 1, 1 = g, 2 = x, 3 = gx.
  Constants c = zero_constants(4);
  for (std::size_t i = 0; i < 4; ++i) {
    c[0][i][i] = 1;
    c[i][0][i] = 1;
  }
  c[1][1] = {1, 0, 0, 0};
  c[1][2] = {0, 0, 0, 1};
  c[1][3] = {0, 0, 1, 0};
  c[2][1] = {0, 0, 0, -1};
  c[3][1] = {0, 0, -1, 0};
  HomAlgebra A = HomAlgebra::from_constants(4, c, identity(4));
  Constants d = zero_constants(4);
  // d[i][j][k]: coefficient of e_j⊗e_k in Δ(e_i).
  d[0][0][0] = 1;
  d[1][1][1] = 1;
  d[2][2][0] = 1;
  d[2][1][2] = 1;
  d[3][3][1] = 1;
  d[3][0][3] = 1;
  HomCoalgebra C = HomCoalgebra::from_constants(4, d, identity(4));
  A.labels = C.labels = {"1", "g", "x", "gx"};
  A.provenance = C.provenance = "H4";
  return HomBialgebra(A, C);
}

HomBialgebra group_bialgebra(std::size_t n) {
  Constants c = zero_constants(n), d = zero_constants(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) c[i][j][(i + j) % n] = 1;
  }
  HomAlgebra A = HomAlgebra::from_constants(n, c, identity(n));
  HomCoalgebra C = HomCoalgebra::from_constants(n, d, identity(n));
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < n; ++i) labels.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
  A.labels = C.labels = labels;
  A.provenance = C.provenance = "k[C" + std::to_string(n) + "]";
  return HomBialgebra(A, C);
}

}  // namespace homtwist
