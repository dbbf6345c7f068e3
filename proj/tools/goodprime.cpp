// goodprime: descent algebras, radical invariants and basic-algebra homology
// over Q and F_p from the command line.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "emit.hpp"
#include "goodprime/acceptance.hpp"
#include "goodprime/bands.hpp"
#include "goodprime/hecke.hpp"
#include "goodprime/nilcoxeter.hpp"
#include "goodprime/radical_invariants.hpp"

namespace {

using namespace goodprime;
using cli::Json;

constexpr const char* kVersion = "1.0.0";

struct Settings {
  std::string command;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 20240611;
  Budgets budgets;
  std::string type;
  int rank = 0;
  int m = 0;
  std::string matrix;
  std::vector<std::uint64_t> primes;
  std::size_t max_degree = 0;  // 0: per-command default
  std::string algebra = "descent";
  std::string normals;
  std::string basis = "consecutive";
  bool no_cross_check = false;
  std::string filter;
  bool deep = false;
};

// ---------------------------------------------------------------- helpers

Json matrix_json(const Matrix<std::size_t>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json mpz_matrix_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

template <Field F>
Json element_json(const DescentAlgebra<F>& alg, const DescentElement<F>& x) {
  Json o = Json::object();
  for (Mask j = 0; j < alg.dim(); ++j)
    if (!alg.ring().is_zero(x[j])) o[mask_name(j)] = alg.ring().format(x[j]);
  return o;
}

Json names_json(const std::vector<Mask>& masks) {
  Json a = Json::array();
  for (Mask m : masks) a.push_back(mask_name(m));
  return a;
}

// Q first, then F_p for each requested prime.
template <class Fn>
void for_each_field(const Settings& s, Fn&& fn) {
  fn(RationalField{});
  for (auto p : s.primes) fn(PrimeField(p));
}

std::vector<std::string> field_names(const Settings& s) {
  std::vector<std::string> out{"Q"};
  for (auto p : s.primes) out.push_back("F" + std::to_string(p));
  return out;
}

CoxeterSystem make_group(const Settings& s) {
  if (!s.matrix.empty()) {
    std::string text = s.matrix;
    std::replace(text.begin(), text.end(), ';', '\n');
    std::replace(text.begin(), text.end(), ',', ' ');
    return CoxeterSystem::parse_matrix(text, s.budgets);
  }
  if (s.type.empty()) fail(ErrorCode::InvalidArgument, "a group needs --type with --rank (or --m for I2), or --matrix");
  if (s.type == "I2" || s.type == "I") {
    if (s.m < 2) fail(ErrorCode::InvalidArgument, "type I2 needs --m >= 2");
    return CoxeterSystem::build("I2", s.m, s.budgets);
  }
  if (s.rank < 1) fail(ErrorCode::InvalidArgument, "--rank must be positive");
  return CoxeterSystem::build(s.type, s.rank, s.budgets);
}

Json config_json(const Settings& s) {
  Json c;
  c["command"] = s.command;
  if (!s.matrix.empty()) {
    c["group"] = {{"matrix", s.matrix}};
  } else if (!s.type.empty()) {
    if (s.type == "I2" || s.type == "I")
      c["group"] = {{"type", "I2"}, {"m", s.m}};
    else
      c["group"] = {{"type", s.type}, {"rank", s.rank}};
  }
  c["primes"] = s.primes;
  if (s.command == "cartan" || s.command == "ext") c["algebra"] = s.algebra;
  if (!s.normals.empty()) c["normals"] = s.normals;
  if (s.max_degree) c["max_degree"] = s.max_degree;
  if (s.command == "nw") {
    c["basis"] = s.basis;
    c["cross_check"] = !s.no_cross_check;
  }
  if (s.command == "verify") {
    c["filter"] = s.filter;
    c["deep"] = s.deep;
  }
  c["seed"] = s.seed;
  c["budgets"] = {{"group", s.budgets.group}, {"syzygy", s.budgets.syzygy}, {"rows", s.budgets.rows}};
  return c;
}

// ---------------------------------------------------------------- algebra sources

struct Source {
  std::string kind;
  std::optional<CoxeterSystem> sys;
  std::shared_ptr<const StructureConstants> a;
  std::optional<MarkTable> marks;
  std::optional<HeckeMonoid> mon;
  std::optional<FaceSemigroup> faces;
  std::optional<SupportLattice> lat;

  static Source make(const Settings& s, const std::string& kind) {
    Source src;
    src.kind = kind;
    if (kind == "faces") {
      if (s.normals.empty()) fail(ErrorCode::InvalidArgument, "face algebras need --normals");
      src.faces = enumerate_faces(parse_normals(s.normals));
      src.lat = support_lattice(*src.faces);
      return src;
    }
    src.sys = make_group(s);
    if (kind == "descent") {
      src.a = std::make_shared<StructureConstants>(*src.sys);
      src.marks = mark_table(*src.sys, *src.a);
    } else if (kind == "hecke") {
      src.mon = hecke_monoid(*src.sys, s.budgets.group);
    } else if (kind != "nilcoxeter") {
      fail(ErrorCode::InvalidArgument, "unknown algebra '" + kind + "'");
    }
    return src;
  }

  template <Field F>
  BasicAlgebra<F> algebra(const F& field) const {
    if (kind == "descent") return descent_basic_algebra(DescentAlgebra<F>(a, field), *marks);
    if (kind == "nilcoxeter") return build_nilcoxeter(*sys, field);
    if (kind == "hecke") return hecke_monoid_algebra(*sys, *mon, field);
    return band_algebra(*faces, *lat, field);
  }

  // Labels of the simples over Q.
  Json simples() const {
    Json a = Json::array();
    if (kind == "descent") {
      for (Mask m : marks->classes.reps) a.push_back(mask_name(m));
    } else if (kind == "nilcoxeter") {
      a.push_back("T");
    } else if (kind == "hecke") {
      for (Mask j = 0; j < sys->num_subsets(); ++j) a.push_back(mask_name(j));
    } else {
      for (auto z : lat->zero_sets) a.push_back(support_name(z));
    }
    return a;
  }

  static std::string support_name(std::uint32_t zero_set) {
    std::string s = "H{";
    bool first = true;
    for (int h = 0; h < 32; ++h)
      if (zero_set >> h & 1) {
        s += (first ? "" : ",") + std::to_string(h + 1);
        first = false;
      }
    return s + "}";
  }
};

template <Field F>
void require_labels(const BasicAlgebra<F>& alg, std::size_t expected, const std::string& field) {
  if (alg.num_simples() != expected)
    fail(ErrorCode::LabelMismatch, "over " + field + " there are " + std::to_string(alg.num_simples()) +
                                       " simples, over Q " + std::to_string(expected));
}

// ---------------------------------------------------------------- subcommands

Json cmd_group(const Settings& s) {
  const auto sys = make_group(s);
  Json b;
  b["label"] = sys.label();
  b["rank"] = sys.rank();
  b["order"] = std::to_string(sys.size());
  Json cm = Json::array();
  for (int i = 0; i < sys.rank(); ++i) {
    Json r = Json::array();
    for (int j = 0; j < sys.rank(); ++j) r.push_back(sys.m(i, j));
    cm.push_back(std::move(r));
  }
  b["coxeter_matrix"] = cm;
  b["num_positive_roots"] = sys.num_positive_roots();
  b["max_length"] = sys.max_length();
  b["length_histogram"] = sys.length_histogram();
  Json classes = Json::array();
  for (const auto& members : coxeter_classes(sys).members) classes.push_back(names_json(members));
  b["classes"] = classes;
  return b;
}

Json cmd_marks(const Settings& s) {
  const auto sys = make_group(s);
  const StructureConstants a(sys);
  const auto t = mark_table(sys, a);
  Json b;
  b["classes"] = names_json(t.classes.reps);
  Json members = Json::array();
  for (const auto& m : t.classes.members) members.push_back(names_json(m));
  b["members"] = members;
  b["beta"] = mpz_matrix_json(t.beta);
  std::vector<std::uint64_t> primes = s.primes;
  if (primes.empty())
    for (std::uint64_t p = 2; p <= sys.size(); ++p)
      if (sys.size() % p == 0 && is_prime(p)) primes.push_back(p);
  Json q = Json::object();
  for (auto p : primes) q[std::to_string(p)] = t.q_classes(p);
  b["q_classes"] = q;
  return b;
}

Json cmd_idempotents(const Settings& s) {
  const auto sys = make_group(s);
  const auto a = std::make_shared<StructureConstants>(sys);
  const auto marks = mark_table(sys, *a);
  Json per = Json::array();
  for_each_field(s, [&](const auto& field) {
    DescentAlgebra alg(a, field);
    const auto idem = primitive_idempotents(alg, marks);
    Json f;
    f["field"] = field.name();
    Json items = Json::array();
    for (std::size_t i = 0; i < idem.e.size(); ++i) {
      Json it;
      it["class"] = mask_name(marks.classes.reps[idem.classes[i]]);
      it["f"] = element_json(alg, idem.f[i]);
      it["e"] = element_json(alg, idem.e[i]);
      items.push_back(std::move(it));
    }
    f["idempotents"] = items;
    per.push_back(std::move(f));
  });
  return {{"fields", per}};
}

Json cmd_radical(const Settings& s) {
  const auto sys = make_group(s);
  const auto a = std::make_shared<StructureConstants>(sys);
  const auto marks = mark_table(sys, *a);
  Json per = Json::array();
  for_each_field(s, [&](const auto& field) {
    DescentAlgebra alg(a, field);
    const auto rad = radical_basis(alg, marks);
    Json f;
    f["field"] = field.name();
    f["dim"] = rad.size();
    Json basis = Json::array();
    for (const auto& r : rad) basis.push_back(element_json(alg, r));
    f["basis"] = basis;
    f["power_dims"] = descent_radical_dims(alg, rad);
    per.push_back(std::move(f));
  });
  return {{"fields", per}};
}

Json nw_block(const CoxeterSystem& sys, const Settings& s) {
  const auto a = std::make_shared<StructureConstants>(sys);
  const IntegerDescent z(a, IntegerRing{});
  const auto omega = omega_basis(coxeter_classes(sys));
  ChainBasis kind;
  if (s.basis == "consecutive")
    kind = ChainBasis::Consecutive;
  else if (s.basis == "anchored")
    kind = ChainBasis::Anchored;
  else
    fail(ErrorCode::InvalidArgument, "--basis must be consecutive or anchored");
  const auto r = nw_invariants(sys, z, omega, !s.no_cross_check, s.budgets, kind);
  Json b;
  b["label"] = sys.label();
  b["order"] = std::to_string(r.order);
  Json pairs = Json::array();
  for (const auto& [j, k] : omega.pairs) pairs.push_back({mask_name(j), mask_name(k)});
  b["omega"] = pairs;
  Json per = Json::array();
  for (const auto& lv : r.per_n) per.push_back({{"n", lv.n}, {"dim", lv.dim}, {"d", lv.d.get_str()}, {"n_Wn", lv.n_wn.get_str()}});
  b["per_n"] = per;
  b["radical_length"] = r.radical_length;
  b["n_W"] = r.n_w.get_str();
  return b;
}

Json cmd_nw(const Settings& s) { return nw_block(make_group(s), s); }

Json cmd_cartan(const Settings& s) {
  const auto src = Source::make(s, s.algebra);
  Json layers = Json::array();
  std::optional<std::vector<Matrix<std::size_t>>> first;
  bool equal = true;
  std::size_t expected = 0;
  for_each_field(s, [&](const auto& field) {
    const auto alg = src.algebra(field);
    alg.validate(s.seed);
    if (!first) expected = alg.num_simples();
    require_labels(alg, expected, field.name());
    const auto l = alg.graded_cartan();
    if (!first) first = l;
    equal = equal && l == *first;
    Json per = Json::array();
    for (const auto& m : l) per.push_back(matrix_json(m));
    layers.push_back(std::move(per));
  });
  return {{"algebra", src.kind}, {"fields", field_names(s)}, {"simples", src.simples()}, {"layers", layers}, {"equal", equal}};
}

Json cmd_ext(const Settings& s) {
  const auto src = Source::make(s, s.algebra);
  const std::size_t t_max = s.max_degree ? s.max_degree : 6;
  std::vector<std::vector<Matrix<std::size_t>>> tables;
  std::size_t expected = 0;
  for_each_field(s, [&](const auto& field) {
    const auto alg = src.algebra(field);
    alg.validate(s.seed);
    if (tables.empty()) expected = alg.num_simples();
    require_labels(alg, expected, field.name());
    tables.push_back(alg.ext_dims(t_max, s.budgets));
  });
  Json ext = Json::object();
  bool equal = true;
  for (std::size_t t = 0; t <= t_max; ++t) {
    Json per = Json::array();
    for (const auto& tab : tables) {
      per.push_back(matrix_json(tab[t]));
      equal = equal && tab[t] == tables[0][t];
    }
    ext[std::to_string(t)] = per;
  }
  return {{"algebra", src.kind}, {"fields", field_names(s)}, {"simples", src.simples()}, {"max_degree", t_max}, {"ext", ext}, {"equal", equal}};
}

Json cmd_nilcoxeter(const Settings& s) {
  const auto sys = make_group(s);
  const std::size_t t_max = s.max_degree ? s.max_degree : 4;
  Json by_field = Json::object(), layers = Json::object();
  std::optional<std::vector<std::size_t>> first;
  bool equal = true;
  for_each_field(s, [&](const auto& field) {
    const auto alg = build_nilcoxeter(sys, field);
    alg.validate(s.seed);
    std::vector<std::size_t> sizes;
    for (const auto& l : alg.graded_cartan()) sizes.push_back(l(0, 0));
    layers[field.name()] = sizes;
    const auto h = nilcoxeter_hilbert(alg, t_max, s.budgets);
    if (!first) first = h;
    equal = equal && h == *first;
    by_field[field.name()] = h;
  });
  Json b;
  b["label"] = sys.label();
  b["fields"] = field_names(s);
  b["length_histogram"] = sys.length_histogram();
  b["layers"] = layers;
  b["ext"] = *first;
  b["ext_by_field"] = by_field;
  b["equal"] = equal;
  return b;
}

Json cmd_faces(const Settings& s) {
  const auto src = Source::make(s, "faces");
  const auto& b = *src.faces;
  const auto& lat = *src.lat;
  Json faces = Json::array();
  for (const auto& f : b.faces) {
    std::string sv;
    for (auto x : f) sv += x > 0 ? '+' : x < 0 ? '-' : '0';
    faces.push_back(sv);
  }
  Json hasse = Json::array();
  for (const auto& [x, y] : lat.hasse) hasse.push_back({x, y});
  Json dims = Json::object(), quiver = Json::array();
  std::optional<std::vector<std::size_t>> first;
  bool equal = true, quiver_ok = true;
  for_each_field(s, [&](const auto& field) {
    const auto alg = band_algebra(b, lat, field);
    alg.validate(s.seed);
    const auto d = alg.radical_dims();
    if (!first) first = d;
    equal = equal && d == *first;
    dims[field.name()] = d;
    const auto arrows = ext_arrows(alg.ext_dims(1, s.budgets)[1]);
    quiver_ok = quiver_ok && arrows == hasse_arrows(lat);
    if (quiver.empty())
      for (const auto& [i, j] : arrows) quiver.push_back({i, j});
  });
  Json out;
  out["num_faces"] = b.size();
  out["faces"] = faces;
  out["supports"] = src.simples();
  out["hasse"] = hasse;
  out["quiver"] = quiver;
  out["quiver_equals_hasse"] = quiver_ok;
  out["fields"] = field_names(s);
  out["radical_dims"] = dims;
  out["equal"] = equal;
  return out;
}

Json cmd_hecke(const Settings& s) {
  const auto src = Source::make(s, "hecke");
  const std::size_t t_max = s.max_degree ? s.max_degree : 3;
  Json dims = Json::object();
  std::vector<std::vector<Matrix<std::size_t>>> tables;
  for_each_field(s, [&](const auto& field) {
    const auto alg = src.algebra(field);
    alg.validate(s.seed);
    dims[field.name()] = alg.radical_dims();
    tables.push_back(alg.ext_dims(t_max, s.budgets));
  });
  Json ext = Json::object();
  bool equal = true;
  for (std::size_t t = 0; t <= t_max; ++t) {
    Json per = Json::array();
    for (const auto& tab : tables) {
      per.push_back(matrix_json(tab[t]));
      equal = equal && tab[t] == tables[0][t];
    }
    ext[std::to_string(t)] = per;
  }
  Json out;
  out["label"] = src.sys->label();
  out["monoid_size"] = src.mon->size();
  out["simples"] = src.simples();
  out["fields"] = field_names(s);
  out["radical_dims"] = dims;
  out["max_degree"] = t_max;
  out["ext"] = ext;
  out["equal"] = equal;
  return out;
}

// Timings go to stderr so the report stays byte-identical across runs.
Json cmd_verify(const Settings& s, bool& all_passed) {
  acceptance::Options opts;
  opts.seed = s.seed;
  opts.budgets = s.budgets;
  const auto results = acceptance::run(opts, s.filter);
  Json list = Json::array();
  all_passed = true;
  for (const auto& r : results) {
    std::fprintf(stderr, "%s %2d %-18s %8.3fs\n", r.passed ? "PASS" : "FAIL", r.id, r.key.c_str(), r.seconds);
    list.push_back({{"id", r.id}, {"key", r.key}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    all_passed = all_passed && r.passed;
  }
  Json out;
  out["criteria"] = list;
  out["passed"] = all_passed;
  if (s.deep) {
    // Informational only: E6 invariants through the lattice iteration.
    Json deep;
    try {
      Settings e6 = s;
      e6.no_cross_check = true;
      deep = nw_block(CoxeterSystem::build("E", 6, s.budgets), e6);
    } catch (const Error& e) {
      deep = {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.message()}}}};
    }
    out["deep"] = deep;
  }
  return out;
}

void add_group_options(CLI::App* sub, Settings& s) {
  sub->add_option("--type", s.type, "Coxeter type: A B C D E F G H I2");
  sub->add_option("--rank", s.rank, "rank");
  sub->add_option("--m", s.m, "m for type I2(m)");
  sub->add_option("--matrix", s.matrix, "Coxeter matrix, rows separated by ';'");
}

void add_prime_option(CLI::App* sub, Settings& s) {
  sub->add_option("--prime", s.primes, "compare Q with F_p (repeatable)")->check(CLI::PositiveNumber);
}

int emit_error(const Error& e) {
  const Json err = {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.message()}}}};
  std::cerr << err.dump() << "\n";
  return is_budget_error(e.code()) ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  try {
    s.budgets = Budgets::from_environment();
  } catch (const Error& e) {
    return emit_error(e);
  }
  CLI::App app{"Descent algebras, radical invariants and basic-algebra homology over Q and F_p", "goodprime"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", s.out, "write the report to this path");
  app.add_option("--seed", s.seed, "seed for randomized associativity checks");
  app.add_option("--budget-group", s.budgets.group, "maximum group order")->check(CLI::PositiveNumber);
  app.add_option("--budget-syzygy", s.budgets.syzygy, "maximum syzygy dimension")->check(CLI::PositiveNumber);
  app.add_option("--budget-rows", s.budgets.rows, "maximum rows of a [J(n)] matrix")->check(CLI::PositiveNumber);

  auto* group = app.add_subcommand("group", "order, lengths and Coxeter classes");
  add_group_options(group, s);
  auto* marks = app.add_subcommand("marks", "table of marks of parabolic subgroups");
  add_group_options(marks, s);
  add_prime_option(marks, s);
  auto* idem = app.add_subcommand("idempotents", "primitive orthogonal idempotents of the descent algebra");
  add_group_options(idem, s);
  add_prime_option(idem, s);
  auto* radical = app.add_subcommand("radical", "radical basis and radical power dimensions");
  add_group_options(radical, s);
  add_prime_option(radical, s);
  auto* nw = app.add_subcommand("nw", "the invariants d_{W,n} and n_W");
  add_group_options(nw, s);
  nw->add_option("--basis", s.basis, "consecutive or anchored chain basis");
  nw->add_flag("--no-cross-check", s.no_cross_check, "skip rebuilding the full [J(n)]");
  auto* cartan = app.add_subcommand("cartan", "graded Cartan matrices over each field");
  auto* ext = app.add_subcommand("ext", "Ext dimensions between simples over each field");
  for (auto* sub : {cartan, ext}) {
    add_group_options(sub, s);
    add_prime_option(sub, s);
    sub->add_option("--algebra", s.algebra, "descent, nilcoxeter, hecke or faces")
        ->check(CLI::IsMember({"descent", "nilcoxeter", "hecke", "faces"}));
    sub->add_option("--normals", s.normals, "hyperplane normals for --algebra faces");
  }
  ext->add_option("--max-degree", s.max_degree, "largest t");
  auto* nil = app.add_subcommand("nilcoxeter", "nilCoxeter algebra and its Ext series");
  add_group_options(nil, s);
  add_prime_option(nil, s);
  nil->add_option("--max-degree", s.max_degree, "largest t");
  auto* faces = app.add_subcommand("faces", "face algebra of a central hyperplane arrangement");
  faces->add_option("--normals", s.normals, "normals such as \"1,0;0,1;1,1\"")->required();
  add_prime_option(faces, s);
  auto* hecke = app.add_subcommand("hecke", "0-Hecke monoid algebra");
  add_group_options(hecke, s);
  add_prime_option(hecke, s);
  hecke->add_option("--max-degree", s.max_degree, "largest t");
  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--filter", s.filter, "only criteria whose key contains this text");
  verify->add_flag("--deep", s.deep, "also attempt the E6 invariants (informational)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(Error(ErrorCode::InvalidArgument, e.what()));
  }

  int code = 0;
  try {
    for (auto p : s.primes)
      if (!is_prime(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    s.command = app.get_subcommands().front()->get_name();
    Json block;
    if (s.command == "group") block = cmd_group(s);
    else if (s.command == "marks") block = cmd_marks(s);
    else if (s.command == "idempotents") block = cmd_idempotents(s);
    else if (s.command == "radical") block = cmd_radical(s);
    else if (s.command == "nw") block = cmd_nw(s);
    else if (s.command == "cartan") block = cmd_cartan(s);
    else if (s.command == "ext") block = cmd_ext(s);
    else if (s.command == "nilcoxeter") block = cmd_nilcoxeter(s);
    else if (s.command == "faces") block = cmd_faces(s);
    else if (s.command == "hecke") block = cmd_hecke(s);
    else if (s.command == "verify") {
      bool passed = true;
      block = cmd_verify(s, passed);
      if (!passed) code = 1;
    }
    Json doc;
    doc["tool"] = "goodprime";
    doc["version"] = kVersion;
    doc["config"] = config_json(s);
    doc[s.command] = block;
    const std::string text = cli::render(doc, s.format);
    if (s.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(s.out, std::ios::binary);
      if (!f) fail(ErrorCode::InvalidArgument, "cannot write " + s.out);
      f << text;
    }
  } catch (const Error& e) {
    return emit_error(e);
  } catch (const std::bad_alloc&) {
    return emit_error(Error(ErrorCode::BudgetExceeded, "out of memory"));
  }
  return code;
}
