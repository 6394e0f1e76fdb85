#include "nlie/catalog.hpp"
#include "nlie/io.hpp"
#include "nlie/structure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using namespace nlie;

namespace {

// exit codes: 0 ok, 1 axiom or form violation, 2 unreadable or malformed
// input, 3 a computation declined to decide over Q, 4 an audit check failed
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kParse = 2;
constexpr int kNotSplit = 3;
constexpr int kAuditFail = 4;

[[noreturn]] void fail(int code, const std::string& msg) {
  std::cerr << msg << "\n";
  std::exit(code);
}

struct Loaded {
  NLieAlgebra algebra;
  std::optional<BilinearForm> form;
};

Loaded load(const std::string& path, bool skip_validate) {
  AlgebraFile file;
  try {
    file = load_algebra_file(path);
  } catch (const ParseError& e) {
    fail(kParse, std::string("parse error: ") + e.what());
  }
  NLieAlgebra a = file.algebra();
  std::optional<BilinearForm> b = file.bilinear_form();
  if (!skip_validate) {
    AxiomReport rep = a.check_axioms();
    if (!rep.ok()) {
      const AxiomViolation& v = rep.violations.front();
      fail(kViolation, "axiom violation: generalized Jacobi identity fails for "
                       "outer tuple " + a.tuple_str(v.outer) +
                       " against inner tuple " + a.tuple_str(v.inner));
    }
    if (b) {
      if (!b->gram.is_symmetric())
        fail(kViolation, "form violation: gram matrix is not symmetric");
      if (auto v = find_invariance_violation(a, *b))
        fail(kViolation, "form violation: invariance fails for head tuple " +
                         a.tuple_str(v->head) + " paired with " +
                         a.basis_names()[v->y1] + ", " + a.basis_names()[v->y2] +
                         ": " + v->lhs.str() + " vs " + (-v->rhs).str());
      if (!is_nondegenerate(*b))
        fail(kViolation, "form violation: gram matrix is degenerate");
    }
  }
  return {std::move(a), std::move(b)};
}

const BilinearForm& need_form(const Loaded& in, const char* cmd) {
  if (!in.form)
    fail(kParse, std::string("input error: '") + cmd +
                 "' needs a form, but the file has none");
  return *in.form;
}

// NotSplit-aware wrappers so every command reports the limitation the same way
template <typename Fn>
auto try_split(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const NotSplitError& e) {
    fail(kNotSplit, std::string("not split: ") + e.what());
  }
}

Subspace certified_socle(const NLieAlgebra& a) {
  SocleResult s = socle(a);
  if (!s.certified)
    fail(kNotSplit, "not split: socle undecided over Q");
  return s.space;
}

std::uint64_t env_seed() {
  const char* env = std::getenv("NLIE_SEED");
  if (!env) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (!end || *end != '\0' || end == env)
    fail(kParse, std::string("input error: bad NLIE_SEED '") + env + "'");
  return v;
}

struct AnalyzeReport {
  std::size_t arity = 0, dim = 0, center_dim = 0, derived_dim = 0;
  std::size_t radical_dim = 0, socle_dim = 0, m_count = 0;
  std::optional<std::size_t> metric_dim;
};

AnalyzeReport analyze(const Loaded& in, std::uint64_t seed) {
  const NLieAlgebra& a = in.algebra;
  AnalyzeReport r;
  r.arity = a.arity();
  r.dim = a.dim();
  r.center_dim = a.center().dim();
  r.derived_dim = a.derived().dim();
  r.radical_dim = try_split([&] { return radical(a, seed); }).dim();
  Subspace soc = certified_socle(a);
  r.socle_dim = soc.dim();
  MinimalIdealSearch mins = find_minimal_ideals(a, soc, seed);
  if (!mins.fully_split())
    fail(kNotSplit, "not split: socle resists splitting into minimal ideals over Q");
  r.m_count = mins.ideals.size();
  if (in.form) r.metric_dim = metric_dimension(a, *in.form).gamma_b_dim;
  return r;
}

void print_analyze(const AnalyzeReport& r, bool as_json) {
  if (as_json) {
    nlohmann::ordered_json j;
    j["arity"] = r.arity;
    j["dim"] = r.dim;
    j["center_dim"] = r.center_dim;
    j["derived_dim"] = r.derived_dim;
    j["radical_dim"] = r.radical_dim;
    j["socle_dim"] = r.socle_dim;
    j["m_count"] = r.m_count;
    if (r.metric_dim) j["metric_dim"] = *r.metric_dim;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "arity: " << r.arity << "\n"
            << "dim: " << r.dim << "\n"
            << "center_dim: " << r.center_dim << "\n"
            << "derived_dim: " << r.derived_dim << "\n"
            << "radical_dim: " << r.radical_dim << "\n"
            << "socle_dim: " << r.socle_dim << "\n"
            << "m_count: " << r.m_count << "\n";
  if (r.metric_dim) std::cout << "metric_dim: " << *r.metric_dim << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure analysis for finite-dimensional n-Lie algebras"};
  app.require_subcommand(1);

  std::string path;
  std::string name;
  bool as_json = false;
  bool skip_validate = false;
  std::optional<std::uint64_t> seed_flag;

  auto add_file_cmd = [&](const char* cmd, const char* what) {
    CLI::App* sub = app.add_subcommand(cmd, what);
    sub->add_option("file", path, "algebra file")->required();
    sub->add_flag("--skip-validate", skip_validate,
                  "skip axiom and invariance checks");
    sub->add_option("--seed", seed_flag, "seed for randomized search paths");
    return sub;
  };

  CLI::App* c_validate = add_file_cmd("validate", "check axioms and the form");
  CLI::App* c_analyze = add_file_cmd("analyze", "summarize structural dimensions");
  c_analyze->add_flag("--json", as_json, "machine-readable output");
  CLI::App* c_decompose =
      add_file_cmd("decompose", "orthogonal decomposition into B-irreducible ideals");
  CLI::App* c_radical = add_file_cmd("radical", "maximal solvable ideal");
  CLI::App* c_socle = add_file_cmd("socle", "sum of the minimal ideals");
  CLI::App* c_metricdim =
      add_file_cmd("metricdim", "dimension of the invariant form space");
  CLI::App* c_audit = add_file_cmd("audit", "run every structural consistency check");
  CLI::App* c_catalog = app.add_subcommand("catalog", "emit a built-in algebra");
  c_catalog->add_option("name", name, "entry name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const std::uint64_t seed = seed_flag ? *seed_flag : env_seed();

  if (c_catalog->parsed()) {
    try {
      CatalogEntry e = builtin(name);
      std::cout << emit(snapshot(e.algebra, &e.forms[0]));
    } catch (const std::out_of_range&) {
      std::string names;
      for (const auto& n : catalog_names()) names += " " + n;
      fail(kParse, "input error: unknown catalog entry '" + name +
                   "'; available:" + names);
    }
    return kOk;
  }

  Loaded in = load(path, skip_validate && !c_validate->parsed());
  const NLieAlgebra& a = in.algebra;

  if (c_validate->parsed()) {
    std::cout << "ok: arity " << a.arity() << ", dim " << a.dim() << ", "
              << a.constants().size() << " nonzero brackets, "
              << (in.form ? "metric form" : "no form") << "\n";
  } else if (c_analyze->parsed()) {
    print_analyze(analyze(in, seed), as_json);
  } else if (c_decompose->parsed()) {
    const BilinearForm& b = need_form(in, "decompose");
    auto comps = try_split([&] { return b_irreducible_decomposition(a, b, seed); });
    std::cout << "components: " << comps.size() << "\n";
    for (std::size_t i = 0; i < comps.size(); i++)
      std::cout << "component " << i + 1 << ": dim " << comps[i].space.dim()
                << ", basis " << comps[i].space.str() << "\n";
  } else if (c_radical->parsed()) {
    Subspace r = try_split([&] { return radical(a, seed); });
    std::cout << "radical: dim " << r.dim() << ", basis " << r.str() << "\n";
  } else if (c_socle->parsed()) {
    Subspace s = certified_socle(a);
    std::cout << "socle: dim " << s.dim() << ", basis " << s.str() << "\n";
  } else if (c_metricdim->parsed()) {
    const BilinearForm& b = need_form(in, "metricdim");
    MetricDimension md = metric_dimension(a, b);
    if (!md.dims_agree)
      fail(kViolation, "internal inconsistency: " + md.warning);
    std::cout << md.gamma_b_dim << "\n";
  } else if (c_audit->parsed()) {
    const BilinearForm& b = need_form(in, "audit");
    AuditOptions opts;
    opts.seed = seed;
    StructureReport rep = audit(a, b, opts);
    for (const auto& row : rep.audit)
      std::cout << "[" << audit_status_str(row.status) << "] " << row.id
                << ": " << row.detail << "\n";
    std::size_t pass = 0, failc = 0, na = 0, nsplit = 0;
    for (const auto& row : rep.audit) {
      if (row.status == AuditStatus::pass) pass++;
      if (row.status == AuditStatus::fail) failc++;
      if (row.status == AuditStatus::not_applicable) na++;
      if (row.status == AuditStatus::not_split) nsplit++;
    }
    std::cout << rep.audit.size() << " checks: " << pass << " pass, " << failc
              << " fail, " << na << " not-applicable, " << nsplit
              << " not-split\n";
    if (failc) return kAuditFail;
    if (nsplit) return kNotSplit;
  }
  return kOk;
}
