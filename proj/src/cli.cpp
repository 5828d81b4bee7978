#include "ie/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ie/ctrep.hpp"
#include "ie/ctvector.hpp"
#include "ie/errors.hpp"
#include "ie/liealg.hpp"
#include "ie/tree.hpp"
#include "ie/verma.hpp"

namespace ie {

namespace {

using Json = nlohmann::ordered_json;

// deterministic across platforms, unlike the standard distributions
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d649bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

BasisElement parse_basis_atom(const std::string& text) {
  LieElement x = parse_element(text);
  if (x.terms().size() != 1 || !(x.terms().begin()->second == Rational(1)))
    throw ParseError("expected a single basis atom", 0);
  return x.terms().begin()->first;
}

Json system_json(const SingularSystem& sys) {
  Json rows = Json::array();
  for (const auto& r : sys.rows) {
    rows.push_back({{"t", r.t.repr()}, {"J", r.j.to_string()}});
  }
  auto matrix_json = [](const ZMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.cols; ++j) row.push_back(to_int64(m.at(i, j)));
      out.push_back(std::move(row));
    }
    return out;
  };
  Json columns = Json::array();
  for (const auto& f : sys.columns) columns.push_back(f.to_string());
  return Json{{"n", sys.n},
              {"columns", std::move(columns)},
              {"rows", std::move(rows)},
              {"A", matrix_json(sys.a)},
              {"B", matrix_json(sys.b)}};
}

struct CliState {
  bool json = false;
  std::optional<int> max_size;

  int tree_guard() const { return max_size.value_or(kDefaultMaxSize); }
  int system_guard() const { return max_size.value_or(kDefaultSystemGuard); }
};

void emit(std::ostream& out, const CliState& state, const Json& payload,
          const std::string& text) {
  if (state.json) {
    out << payload.dump() << "\n";
  } else {
    out << text;
  }
}

int dispatch(CLI::App& app, const CliState& state, std::ostream& out) {
  std::ostringstream text;

  if (auto* trees = app.get_subcommand("trees"); trees->parsed()) {
    int n = trees->get_option("--n")->as<int>();
    if (trees->get_subcommand("enumerate")->parsed()) {
      auto list = enumerate_trees(n, state.tree_guard());
      Json names = Json::array();
      for (const auto& t : list) {
        names.push_back(t.repr());
        text << t.repr() << "\n";
      }
      emit(out, state,
           Json{{"n", n}, {"count", list.size()}, {"trees", std::move(names)}},
           text.str());
    } else {
      auto list = enumerate_trees(n, state.tree_guard());
      text << list.size() << "\n";
      emit(out, state, Json{{"n", n}, {"count", list.size()}}, text.str());
    }
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("bracket"); cmd->parsed()) {
    LieElement x = parse_element(cmd->get_option("x")->as<std::string>());
    LieElement y = parse_element(cmd->get_option("y")->as<std::string>());
    LieElement result = bracket(x, y);
    text << result.to_string() << "\n";
    emit(out, state,
         Json{{"x", x.to_string()}, {"y", y.to_string()}, {"result", result.to_string()}},
         text.str());
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("act"); cmd->parsed()) {
    LieElement x = parse_element(cmd->get_option("x")->as<std::string>());
    CTVector v = parse_ct_vector(cmd->get_option("v")->as<std::string>());
    CTVector result = act(x, v);
    text << result.to_string() << "\n";
    emit(out, state,
         Json{{"x", x.to_string()}, {"v", v.to_string()}, {"result", result.to_string()}},
         text.str());
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("oracle-check"); cmd->parsed()) {
    BasisElement x = parse_basis_atom(cmd->get_option("x")->as<std::string>());
    BasisElement y = parse_basis_atom(cmd->get_option("y")->as<std::string>());
    int max_n = cmd->get_option("--max-n")->as<int>();
    OracleReport report = oracle_bracket_check(x, y, max_n, state.tree_guard());
    if (report.ok) {
      text << "ok: " << report.checked_levels << " levels checked\n";
    } else {
      text << "discrepancy at n=" << report.first_failure_n << "\n";
    }
    Json payload{{"x", x.to_string()},
                 {"y", y.to_string()},
                 {"max_n", max_n},
                 {"ok", report.ok},
                 {"levels_checked", report.checked_levels}};
    payload["first_failure_n"] =
        report.ok ? Json(nullptr) : Json(report.first_failure_n);
    emit(out, state, payload, text.str());
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("descend"); cmd->parsed()) {
    LieElement x = parse_element(cmd->get_option("x")->as<std::string>());
    DescentReport report = descend(x);
    Json steps = Json::array();
    for (std::size_t i = 0; i < report.steps.size(); ++i) {
      const auto& step = report.steps[i];
      text << "step " << (i + 1) << ": xi=" << step.xi.repr() << " -> "
           << step.result.to_string() << "\n";
      steps.push_back({{"xi", step.xi.repr()}, {"result", step.result.to_string()}});
    }
    if (report.vanished) text << "vanished at step " << report.steps.size() << "\n";
    text << "final: " << report.final_element.to_string() << "\n";
    emit(out, state,
         Json{{"input", x.to_string()},
              {"steps", std::move(steps)},
              {"vanished", report.vanished},
              {"final", report.final_element.to_string()}},
         text.str());
    return kExitOk;
  }

  if (auto* verma = app.get_subcommand("verma"); verma->parsed()) {
    int n = verma->get_option("--n")->as<int>();
    if (verma->get_subcommand("system")->parsed()) {
      SingularSystem sys = singular_system(n, state.system_guard());
      text << "n=" << sys.n << " rows=" << sys.rows.size()
           << " cols=" << sys.columns.size() << "\n";
      text << "columns:";
      for (const auto& f : sys.columns) text << " " << f.to_string();
      text << "\n";
      for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        text << "Dm[" << sys.rows[i].t.repr() << "] [" << sys.rows[i].j.to_string()
             << "] :";
        for (std::size_t j = 0; j < sys.columns.size(); ++j) {
          text << " "
               << LambdaPoly::linear(sys.a.at(i, j), sys.b.at(i, j)).to_string(false);
        }
        text << "\n";
      }
      emit(out, state, system_json(sys), text.str());
      return kExitOk;
    }
    if (verma->get_subcommand("det")->parsed()) {
      GenericDetReport report = generic_det(n, state.system_guard());
      Json payload{{"n", n}};
      if (report.rank_deficient) {
        text << "rank deficient: generic rank " << report.generic_rank << "\n";
        payload["outcome"] = "rank_deficient";
        payload["generic_rank"] = report.generic_rank;
      } else {
        text << report.det.to_string(false) << "\n";
        payload["outcome"] = "ok";
        payload["det"] = report.det.to_string(false);
      }
      emit(out, state, payload, text.str());
      return kExitOk;
    }
    if (verma->get_subcommand("exceptional")->parsed()) {
      ExceptionalReport report = exceptional_candidates(n, state.system_guard());
      Json payload{{"n", n}};
      if (report.rank_deficient) {
        text << "rank deficient\n";
        payload["outcome"] = "rank_deficient";
      } else {
        payload["outcome"] = "ok";
        text << "confirmed:";
        Json confirmed = Json::array();
        if (report.confirmed.empty()) text << " none";
        for (const auto& r : report.confirmed) {
          text << " " << r.to_string();
          confirmed.push_back(r.to_string());
        }
        text << "\n";
        text << "residual: " << report.residual.to_string(false) << "\n";
        payload["confirmed"] = std::move(confirmed);
        payload["residual"] = report.residual.to_string(false);
      }
      emit(out, state, payload, text.str());
      return kExitOk;
    }
    // kernel
    auto* kernel = verma->get_subcommand("kernel");
    Rational lambda0 = Rational::from_string(kernel->get_option("--lambda")->as<std::string>());
    std::vector<VermaVector> basis = kernel_at(lambda0, n, state.system_guard());
    text << "dim " << basis.size() << "\n";
    Json vectors = Json::array();
    for (const auto& w : basis) {
      text << w.to_string() << "\n";
      vectors.push_back(w.to_string());
    }
    emit(out, state,
         Json{{"lambda", lambda0.to_string()},
              {"n", n},
              {"dim", basis.size()},
              {"vectors", std::move(vectors)}},
         text.str());
    return kExitOk;
  }

  if (auto* chr = app.get_subcommand("char"); chr->parsed()) {
    int n = chr->get_option("--n")->as<int>();
    if (chr->get_subcommand("ct")->parsed()) {
      auto dims = ct_character(n, state.tree_guard());
      for (std::size_t i = 0; i < dims.size(); ++i) text << (i ? " " : "") << dims[i];
      text << "\n";
      emit(out, state, Json{{"n", n}, {"dims", dims}}, text.str());
      return kExitOk;
    }
    VermaCharacterReport report = verma_character(n, state.tree_guard());
    for (std::size_t i = 0; i < report.dims.size(); ++i)
      text << (i ? " " : "") << report.dims[i];
    text << "\n";
    text << "add-root identity: " << (report.add_root_identity ? "ok" : "FAIL") << "\n";
    text << "product identity: " << (report.product_identity ? "ok" : "FAIL") << "\n";
    emit(out, state,
         Json{{"n", n},
              {"dims", report.dims},
              {"add_root_identity", report.add_root_identity},
              {"product_identity", report.product_identity}},
         text.str());
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("z1-check"); cmd->parsed()) {
    int n = cmd->get_option("--n")->as<int>();
    Z1Report report = z1_isomorphism_check(n, state.tree_guard());
    text << "n=" << report.n << " size=" << report.size
         << " invertible=" << (report.invertible ? "yes" : "no")
         << " intertwines=" << (report.intertwines ? "yes" : "no") << "\n";
    Json matrix = Json::array();
    for (std::size_t i = 0; i < report.matrix.rows; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < report.matrix.cols; ++j)
        row.push_back(to_int64(report.matrix.at(i, j)));
      matrix.push_back(std::move(row));
    }
    emit(out, state,
         Json{{"n", report.n},
              {"size", report.size},
              {"square", report.square},
              {"invertible", report.invertible},
              {"intertwines", report.intertwines},
              {"matrix", std::move(matrix)}},
         text.str());
    return kExitOk;
  }

  // jacobi-sample
  auto* cmd = app.get_subcommand("jacobi-sample");
  int count = cmd->get_option("--count")->as<int>();
  int tree_size = cmd->get_option("--tree-size")->as<int>();
  std::uint64_t seed = cmd->get_option("--seed")->as<std::uint64_t>();

  std::vector<BasisElement> pool;
  for (int k = 1; k <= tree_size; ++k) {
    for (const auto& t : enumerate_trees(k, state.tree_guard())) {
      pool.push_back(BasisElement::insertion(t));
      pool.push_back(BasisElement::elimination(t));
    }
  }
  pool.push_back(BasisElement::grading());

  SplitMix64 rng(seed);
  int antisym_failures = 0;
  int jacobi_failures = 0;
  for (int i = 0; i < count; ++i) {
    LieElement x = LieElement::basis(pool[rng.below(pool.size())]);
    LieElement y = LieElement::basis(pool[rng.below(pool.size())]);
    LieElement z = LieElement::basis(pool[rng.below(pool.size())]);
    if (!(bracket(x, y) + bracket(y, x)).is_zero()) ++antisym_failures;
    LieElement jac = bracket(x, bracket(y, z));
    jac += bracket(y, bracket(z, x));
    jac += bracket(z, bracket(x, y));
    if (!jac.is_zero()) ++jacobi_failures;
  }
  text << "seed=" << seed << " count=" << count << " max-tree-size=" << tree_size << "\n";
  text << "antisymmetry: " << (antisym_failures == 0 ? "ok" : "FAIL") << "\n";
  text << "jacobi: " << (jacobi_failures == 0 ? "ok" : "FAIL") << "\n";
  emit(out, state,
       Json{{"seed", seed},
            {"count", count},
            {"max_tree_size", tree_size},
            {"antisymmetry_ok", antisym_failures == 0},
            {"jacobi_ok", jacobi_failures == 0},
            {"antisymmetry_failures", antisym_failures},
            {"jacobi_failures", jacobi_failures}},
       text.str());
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the insertion-elimination Lie algebra on rooted trees"};
  app.name("ie");

  CliState state;
  app.add_flag("--json", state.json, "emit JSON instead of plain text");
  app.add_option("--max-size", state.max_size,
                 "override the size guard (trees for enumeration commands, weight "
                 "offset for verma commands)")
      ->envname("IE_MAX_SIZE");
  app.require_subcommand(1);

  auto add_n = [](CLI::App* sub) {
    sub->add_option("--n", "degree / weight offset")->required();
    sub->fallthrough();
  };

  auto* trees = app.add_subcommand("trees", "rooted-tree enumeration");
  trees->require_subcommand(1);
  trees->fallthrough();
  trees->add_option("--n", "vertex count")->required();
  trees->add_subcommand("enumerate", "list all trees of the given size")->fallthrough();
  trees->add_subcommand("count", "count trees of the given size")->fallthrough();

  auto* br = app.add_subcommand("bracket", "Lie bracket of two elements");
  br->add_option("x", "first element")->required();
  br->add_option("y", "second element")->required();
  br->fallthrough();

  auto* act_cmd = app.add_subcommand("act", "apply an element to a tree vector");
  act_cmd->add_option("x", "element")->required();
  act_cmd->add_option("v", "tree vector")->required();
  act_cmd->fallthrough();

  auto* oracle = app.add_subcommand(
      "oracle-check", "compare the bracket with the operator commutator");
  oracle->add_option("x", "first basis atom")->required();
  oracle->add_option("y", "second basis atom")->required();
  oracle->add_option("--max-n", "largest degree to check")->default_val(4);
  oracle->fallthrough();

  auto* desc = app.add_subcommand("descend", "lower an element to degree one");
  desc->add_option("x", "homogeneous insertion-supported element")->required();
  desc->fallthrough();

  auto* verma = app.add_subcommand("verma", "Verma-module computations");
  verma->require_subcommand(1);
  add_n(verma);
  verma->add_subcommand("system", "assemble the lowest-weight condition pencil")
      ->fallthrough();
  verma->add_subcommand("det", "generic determinant of the pencil")->fallthrough();
  verma->add_subcommand("exceptional", "confirmed rational exceptional weights")
      ->fallthrough();
  auto* kernel = verma->add_subcommand("kernel", "kernel of the pencil at a weight");
  kernel->add_option("--lambda", "rational weight (use --lambda=-1/2 for negatives)")
      ->required();
  kernel->fallthrough();

  auto* chr = app.add_subcommand("char", "graded dimensions");
  chr->require_subcommand(1);
  add_n(chr);
  chr->add_subcommand("ct", "dimensions of the tree space")->fallthrough();
  chr->add_subcommand("verma", "weight-space dimensions and identities")->fallthrough();

  auto* z1 = app.add_subcommand("z1-check", "add-root transport at lowest weight 1");
  add_n(z1);

  auto* jac = app.add_subcommand("jacobi-sample", "sample Jacobi and antisymmetry");
  jac->add_option("--count", "number of sampled triples")->default_val(500);
  jac->add_option("--tree-size", "largest tree size in the pool")->default_val(4);
  jac->add_option("--seed", "seed of the deterministic generator")->default_val(1);
  jac->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("ie");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  }

  try {
    return dispatch(app, state, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace ie
