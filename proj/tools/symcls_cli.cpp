// symcls: group tables, Brauer characters, orbital dimensions, o-basis
// searches and verification sweeps from the command line.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symcls/brauer.hpp"
#include "symcls/error.hpp"
#include "symcls/group.hpp"
#include "symcls/report.hpp"
#include "symcls/tensor.hpp"
#include "symcls/theorems.hpp"

using namespace symcls;
using ordered_json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupFamily parse_family(const std::string& kind, int param) {
  const auto k = parse_family_kind(kind);
  if (!k) throw UsageError("unknown family '" + kind + "' (expected dihedral, dicyclic or semidihedral)");
  GroupFamily f{*k, param};
  if (param < f.min_param()) {
    throw UsageError(f.kind_name() + " needs parameter >= " + std::to_string(f.min_param()));
  }
  return f;
}

void require_prime(int p) {
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
}

const BrauerCharacter& pick_character(const std::vector<BrauerCharacter>& ibr, int idx) {
  if (idx < 0 || static_cast<std::size_t>(idx) >= ibr.size()) {
    throw UsageError("--char must be in [0, " + std::to_string(ibr.size()) + ") for this group and prime");
  }
  return ibr[static_cast<std::size_t>(idx)];
}

IndexSequence parse_sequence(const std::string& text) {
  IndexSequence out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad sequence entry '" + item + "'");
    }
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + out_path);
  f << text;
}

IndexSequence gamma_for(const FiniteGroup& g, const BrauerCharacter& phi, int dim_v, int t_gamma,
                        const std::string& gamma_text) {
  if (!gamma_text.empty()) {
    IndexSequence gamma = parse_sequence(gamma_text);
    if (gamma.size() != static_cast<std::size_t>(g.degree())) {
      throw UsageError("--gamma needs " + std::to_string(g.degree()) + " entries");
    }
    return gamma;
  }
  const int l = phi.split.l;
  const int t = t_gamma > 0 ? t_gamma : (dim_v >= 2 ? l : 1);
  if (l % t != 0) throw UsageError("--t-gamma must divide l = " + std::to_string(l));
  return construct_sequence_with_stabilizer(g, dim_v, rotation_subgroup(g, phi.split.pt),
                                            rotation_subgroup(g, t * phi.split.pt));
}

int cmd_group_info(const GroupFamily& f, const std::vector<int>& primes) {
  const FiniteGroup g = build_group(f);
  std::cout << f.name() << ": order " << g.order() << ", degree " << g.degree() << ", "
            << g.conjugacy_classes().size() << " conjugacy classes\n";
  for (const auto& cls : g.conjugacy_classes()) {
    std::cout << "  [" << g.element_name(cls.front()) << "] size " << cls.size() << ", order "
              << element_order(g, cls.front()) << "\n";
  }
  for (int p : primes) {
    require_prime(p);
    const PrimeSplit s = split_prime(g.rotation_order(), p);
    std::cout << "p = " << p << ": rotation order = " << s.l << " * " << p << "^" << s.t << ", "
              << p_regular_classes(g, p).size() << " p-regular classes, " << p_regular_elements(g, p).size()
              << " p-regular elements\n";
  }
  return kExitOk;
}

int cmd_characters(const GroupFamily& f, int p, const std::string& format) {
  require_prime(p);
  const FiniteGroup g = build_group(f);
  const auto ibr = irreducible_brauer_characters(g, p);
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < ibr.size(); ++i) {
    const SupportInfo s = cyclic_support(g, ibr[i]);
    ordered_json row;
    row["idx"] = i;
    row["label"] = ibr[i].label();
    row["degree"] = ibr[i].spec.degree();
    row["restricts"] = ibr[i].spec.label(false);
    row["vanishes_off_C"] = s.vanishes_off_c;
    row["nonzero_on_C"] = s.nonzero_on_c;
    rows.push_back(std::move(row));
  }
  if (format == "json") {
    ordered_json doc;
    doc["group"] = f.name();
    doc["p"] = p;
    doc["p_regular_classes"] = p_regular_classes(g, p).size();
    doc["characters"] = rows;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << f.name() << ", p = " << p << ": " << ibr.size() << " irreducible Brauer characters, "
            << p_regular_classes(g, p).size() << " p-regular classes\n";
  std::cout << "idx  label                 deg  vanishes_off_C  nonzero_on_C\n";
  for (const auto& r : rows) {
    std::string label = r["label"].get<std::string>();
    label.resize(std::max<std::size_t>(label.size(), 20), ' ');
    std::cout << r["idx"].get<int>() << (r["idx"].get<int>() < 10 ? "    " : "   ") << label << "  "
              << r["degree"].get<int>() << "    " << (r["vanishes_off_C"].get<bool>() ? "yes" : "no ")
              << "             " << (r["nonzero_on_C"].get<bool>() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_dim(const GroupFamily& f, int p, int char_idx, int dim_v, int t_gamma, const std::string& gamma_text) {
  require_prime(p);
  const FiniteGroup g = build_group(f);
  const auto ibr = irreducible_brauer_characters(g, p);
  const BrauerCharacter& phi = pick_character(ibr, char_idx);
  const IndexSequence gamma = gamma_for(g, phi, dim_v, t_gamma, gamma_text);
  const OrbitalData od = orbital_data(g, phi, gamma);
  std::cout << f.name() << ", p = " << p << ", " << phi.label() << "\n";
  std::cout << "gamma        " << to_string(gamma) << "\n";
  std::cout << "|C|          " << od.c.size() << "  (tau = " << g.element_name(od.tau) << ")\n";
  std::cout << "|C cap G_g|  " << od.c_cap_stabilizer.size() << "\n";
  std::cout << "t_gamma      " << od.t_gamma << "\n";
  std::cout << "v            ";
  for (std::size_t j = 0; j < od.v.size(); ++j) std::cout << (j ? ", " : "") << od.v[j].to_string();
  std::cout << "\n";
  std::cout << "d_gamma      " << od.d_gamma << "\n";
  std::cout << "dim          " << od.dim << "\n";
  std::cout << "rank M       " << rank(matrix_M_gamma(g, phi, od)) << "\n";
  std::cout << "rank Gram    " << rank(gram_matrix(g, phi, od)) << "\n";
  if (!phi.is_linear() && phi.split.l % od.t_gamma == 0) {
    const CaseParams c = make_case(f, p, dim_v, phi.spec);
    std::cout << "predicted    " << predicted_dim(c, od.t_gamma) << "\n";
  }
  return kExitOk;
}

int cmd_obasis(const GroupFamily& f, int p, int char_idx, int dim_v, int t_gamma, const std::string& gamma_text,
               std::size_t cap) {
  require_prime(p);
  const FiniteGroup g = build_group(f);
  const auto ibr = irreducible_brauer_characters(g, p);
  const BrauerCharacter& phi = pick_character(ibr, char_idx);
  const CaseParams c = make_case(f, p, dim_v, phi.spec);
  std::cout << f.name() << ", p = " << p << ", " << phi.label() << ", dim V = " << dim_v << "\n";
  if (phi.is_linear()) {
    VerifyOptions options;
    options.orbit_cap = cap;
    const VerificationReport r = verify_case(g, phi, dim_v, options);
    for (const auto& o : r.sample) {
      std::cout << "  " << to_string(o.alpha) << "  dim " << o.dim << "  "
                << (o.has_obasis ? "o-basis {" + join(o.witness) + "}" : std::string("no o-basis")) << "\n";
    }
    std::cout << "observed (sampled)  " << (r.observed_obasis ? "o-basis" : "no o-basis") << "\n";
    std::cout << "predicted           " << (r.predicted_obasis ? "o-basis" : "no o-basis") << "\n";
    for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
    return r.agree ? kExitOk : kExitDisagreement;
  }
  const IndexSequence gamma = gamma_for(g, phi, dim_v, t_gamma, gamma_text);
  const OrbitalData od = orbital_data(g, phi, gamma);
  const ObasisResult ob = obasis_search(g, phi, od);
  std::cout << "gamma      " << to_string(gamma) << "\n";
  std::cout << "t_gamma    " << od.t_gamma << ", dim " << od.dim << "\n";
  if (ob.exists) {
    std::cout << "o-basis    {";
    for (std::size_t i = 0; i < ob.witness.size(); ++i) {
      std::cout << (i ? ", " : "") << "sigma_" << ob.witness[i];
    }
    std::cout << "}\n";
  } else {
    std::cout << "o-basis    none among the " << od.t_gamma << " coset tensors\n";
  }
  const bool predicted = predicted_dim(c, od.t_gamma) == 0 ? true : predicate_two_dim(c);
  std::cout << "predicted  " << (predicted ? "o-basis" : "no o-basis") << "\n";
  return predicted == ob.exists ? kExitOk : kExitDisagreement;
}

int cmd_verify(SweepConfig config, const std::vector<std::string>& family_names, const std::string& format,
               const std::string& out_path) {
  if (!family_names.empty()) {
    config.families.clear();
    for (const auto& name : family_names) {
      const auto k = parse_family_kind(name);
      if (!k) throw UsageError("unknown family '" + name + "'");
      config.families.push_back(*k);
    }
  }
  if (config.n_lo > config.n_hi || config.dim_lo > config.dim_hi) {
    std::cerr << "warning: empty sweep range\n";
    SweepResult empty;
    empty.warnings.push_back("empty sweep range");
    emit(format == "csv" ? to_csv(empty) : to_json(config, empty), out_path);
    return kExitOk;
  }
  for (int p : config.primes) require_prime(p);
  const SweepResult result = run_sweep(config);
  emit(format == "csv" ? to_csv(result) : to_json(config, result), out_path);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& e : result.failures) std::cerr << "failure: " << e << "\n";
  std::size_t disagree = 0;
  for (const auto& r : result.records) disagree += r.agree ? 0 : 1;
  std::cerr << result.records.size() << " records, " << disagree << " disagreeing, " << result.vacuous.size()
            << " vacuous\n";
  return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer symmetry classes of tensors for dihedral, dicyclic and semidihedral groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string family;
  int param = 0;
  std::vector<int> primes;
  int p = 2;
  int char_idx = 0;
  int dim_v = 2;
  int t_gamma = 0;
  std::string gamma_text;
  std::string format = "json";
  std::string char_format = "text";
  std::string out_path;
  std::size_t cap = 12;

  auto add_group_args = [&](CLI::App* sub) {
    sub->add_option("family", family, "dihedral | dicyclic | semidihedral")->required();
    sub->add_option("param", param, "m for D_m, n for T_4n and SD_8n")->required();
  };

  auto* group_info = app.add_subcommand("group-info", "Order, conjugacy classes and p-regular classes");
  add_group_args(group_info);
  group_info->add_option("--p", primes, "Primes to report p-regular classes for");

  auto* characters = app.add_subcommand("characters", "Irreducible Brauer characters");
  add_group_args(characters);
  characters->add_option("--p", p, "Prime")->required();
  characters->add_option("--format", char_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* dim = app.add_subcommand("dim", "Orbital dimension over the cyclic support");
  add_group_args(dim);
  dim->add_option("--p", p, "Prime")->required();
  dim->add_option("--char", char_idx, "Index into the Brauer character list")->required();
  dim->add_option("--dim-v", dim_v, "dim V")->check(CLI::PositiveNumber);
  dim->add_option("--t-gamma", t_gamma, "Build gamma with this t_gamma (divisor of l)");
  dim->add_option("--gamma", gamma_text, "Explicit sequence, comma separated");

  auto* obasis = app.add_subcommand("obasis", "Search for an o-basis");
  add_group_args(obasis);
  obasis->add_option("--p", p, "Prime")->required();
  obasis->add_option("--char", char_idx, "Index into the Brauer character list")->required();
  obasis->add_option("--dim-v", dim_v, "dim V")->check(CLI::PositiveNumber);
  obasis->add_option("--t-gamma", t_gamma, "Build gamma with this t_gamma (divisor of l)");
  obasis->add_option("--gamma", gamma_text, "Explicit sequence, comma separated");
  obasis->add_option("--cap", cap, "Orbit representative cap for linear characters");

  SweepConfig sweep;
  std::vector<std::string> family_names;
  std::vector<int> n_range;
  std::vector<int> dim_range;
  std::vector<int> sweep_primes;
  auto* verify = app.add_subcommand("verify", "Sweep and compare closed forms with exact oracles");
  verify->add_option("--families", family_names, "Families to sweep")->delimiter(',');
  verify->add_option("--n-range", n_range, "Parameter range lo hi")->expected(2);
  verify->add_option("--primes", sweep_primes, "Primes")->delimiter(',');
  verify->add_option("--dim-v-range", dim_range, "dim V range lo hi")->expected(2);
  verify->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", out_path, "Output path (stdout when omitted)");
  verify->add_option("--cap", cap, "Orbit representative cap for linear characters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*group_info) return cmd_group_info(parse_family(family, param), primes);
    if (*characters) return cmd_characters(parse_family(family, param), p, char_format);
    if (*dim) return cmd_dim(parse_family(family, param), p, char_idx, dim_v, t_gamma, gamma_text);
    if (*obasis) return cmd_obasis(parse_family(family, param), p, char_idx, dim_v, t_gamma, gamma_text, cap);
    if (*verify) {
      if (!n_range.empty()) {
        sweep.n_lo = n_range[0];
        sweep.n_hi = n_range[1];
      }
      if (!dim_range.empty()) {
        sweep.dim_lo = dim_range[0];
        sweep.dim_hi = dim_range[1];
      }
      if (!sweep_primes.empty()) sweep.primes = sweep_primes;
      sweep.orbit_cap = cap;
      return cmd_verify(sweep, family_names, format, out_path);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ConstructionFailure:
        return kExitConstructionFailure;
      default:
        return kExitUsage;
    }
  }
  return kExitUsage;
}
