// Command-line front end: builds exact structure-constant presentations of the
// quantum multiple torus family, runs the verification suites, decomposes, and
// emits machine-readable JSON reports.  Exit codes: 0 all requested checks
// pass, 1 a check failed (witness in the JSON), 2 configuration error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmt/acceptance.hpp"
#include "qmt/action.hpp"
#include "qmt/builders.hpp"
#include "qmt/cocycle.hpp"
#include "qmt/decompose.hpp"
#include "qmt/lattice.hpp"
#include "qmt/pairing.hpp"
#include "qmt/permgroup.hpp"
#include "qmt/presentation.hpp"
#include "qmt/report.hpp"
#include "qmt/sequence.hpp"
#include "qmt/verify.hpp"
#include "qmt/window.hpp"

namespace {

using qmt::Json;

struct Opts {
  std::string what;
  std::string in, out;
  std::string group = "Z3";
  std::vector<std::string> perm;
  int n = 0;
  int N = 2;
  long D = 0;
  std::string family;
  int a = 1, b = 2;
  std::string t = "0";
  std::string rho = "0";
  std::vector<std::string> theta;
  long scale = 0;
  std::string lattice;
  unsigned long seed = 1;
  int triples = 50;
  std::string rule = "canonical-kpw";
  std::string name;
  bool antisym = false;
  bool grouplikes = false;
  bool self_duality = false;
  std::string tolerance;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

mpq_class parse_rat(const std::string& s) {
  try {
    mpq_class r(s);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: " + s);
  }
}

qmt::QMat parse_qmat(const std::string& s, int n) {
  std::vector<std::string> rows = split(s, ';');
  if (int(rows.size()) != n)
    throw std::invalid_argument("form needs " + std::to_string(n) + " rows: " + s);
  qmt::QMat m = qmt::qmat_zero(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> cells = split(rows[size_t(i)], ',');
    if (int(cells.size()) != n)
      throw std::invalid_argument("form row needs " + std::to_string(n) + " entries: " + rows[size_t(i)]);
    for (int j = 0; j < n; ++j) m[size_t(i)][size_t(j)] = parse_rat(cells[size_t(j)]);
  }
  return m;
}

qmt::PermGroup resolve_group(const Opts& o) {
  if (!o.perm.empty()) {
    if (o.n <= 0) throw std::invalid_argument("--perm requires --n (degree of the action)");
    std::vector<qmt::Perm> gens;
    for (const auto& s : o.perm) gens.push_back(qmt::perm_parse(s, o.n));
    return qmt::PermGroup::close(o.n, gens);
  }
  int n = o.n;
  if (n <= 0) {
    try {
      n = std::stoi(o.group.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot infer degree from group name: " + o.group);
    }
  }
  return qmt::named_group(o.group, n);
}

qmt::CocycleFamily resolve_family(const qmt::PermGroup& G, const Opts& o) {
  if (!o.theta.empty()) {
    std::vector<qmt::QMat> forms;
    for (const auto& s : o.theta) forms.push_back(parse_qmat(s, G.n));
    return qmt::family_from_generator_forms(G, forms);
  }
  std::string fam = o.family.empty() ? "t1" : o.family;
  if (fam == "t1") return qmt::t1_family(G, o.a, o.b, o.N);
  if (fam == "flip") return qmt::flip_family(G, parse_rat(o.t));
  if (fam == "antisym") return qmt::antisym_z3_family(G, parse_rat(o.t), parse_rat(o.rho));
  if (fam == "zero")
    return qmt::family_from_generator_forms(G, std::vector<qmt::QMat>(1, qmt::qmat_zero(G.n)));
  throw std::invalid_argument("unknown cocycle family: " + fam);
}

qmt::Lattice resolve_lattice(const qmt::PermGroup& G, const Opts& o) {
  if (!o.lattice.empty()) {
    std::vector<std::string> cols = split(o.lattice, ';');
    if (int(cols.size()) != G.n)
      throw std::invalid_argument("lattice needs " + std::to_string(G.n) + " columns");
    qmt::ZMat A(size_t(G.n), qmt::ZVec(size_t(G.n)));
    for (int c = 0; c < G.n; ++c) {
      std::vector<std::string> cells = split(cols[size_t(c)], ',');
      if (int(cells.size()) != G.n)
        throw std::invalid_argument("lattice column needs " + std::to_string(G.n) +
                                    " entries: " + cols[size_t(c)]);
      for (int r = 0; r < G.n; ++r) {
        try {
          A[size_t(r)][size_t(c)] = mpz_class(cells[size_t(r)]);
        } catch (const std::exception&) {
          throw std::invalid_argument("not an integer: " + cells[size_t(r)]);
        }
      }
    }
    return qmt::Lattice::from_columns(A);
  }
  long s = o.scale > 0 ? o.scale : o.N;
  return qmt::Lattice::scaled(G.n, s);
}

qmt::Presentation source_presentation(const Opts& o) {
  if (!o.in.empty()) return qmt::load_presentation(o.in);
  if (o.what == "kp") return qmt::build_kp(o.N);
  if (o.what == "dual-w") return qmt::build_dual_w(o.N);
  if (o.what == "fibration" || o.what == "w-sub") {
    qmt::PermGroup G = resolve_group(o);
    qmt::CocycleFamily th = resolve_family(G, o);
    qmt::Lattice L = resolve_lattice(G, o);
    return o.what == "fibration" ? qmt::build_fibration(G, th, L)
                                 : qmt::build_w_subalgebra(G, th, L);
  }
  if (o.what == "group") return qmt::build_group_algebra(resolve_group(o));
  if (o.what == "function") return qmt::build_function_algebra(resolve_group(o));
  if (o.what.empty())
    throw std::invalid_argument(
        "give a family (kp | dual-w | fibration | w-sub | group | function) or --in FILE");
  throw std::invalid_argument("unknown family: " + o.what);
}

int emit(const Json& j, const Opts& o, int code) {
  std::string text = j.dump(2);
  text += "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw std::invalid_argument("cannot write output file: " + o.out);
    f << text;
  }
  std::cout << text;
  return code;
}

Json read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  std::string text = ss.str();
  size_t p = text.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && text[p] == '{') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw std::invalid_argument("config file is not a JSON object: " + path);
    return j;
  }
  Json j = Json::object();
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    size_t eq = line.find('=');
    if (eq == std::string::npos) eq = line.find(':');
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    if (eq == std::string::npos) {
      if (!trim(line).empty())
        throw std::invalid_argument("config line is not key = value: " + line);
      continue;
    }
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument("config line has empty key: " + line);
    if (j.contains(key)) {
      // repeated keys accumulate, matching repeatable flags
      if (!j[key].is_array()) j[key] = Json::array({j[key]});
      j[key].push_back(val);
    } else {
      j[key] = val;
    }
  }
  return j;
}

long as_long(const Json& v, const std::string& key) {
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_string()) {
    try {
      size_t used = 0;
      long r = std::stol(v.get<std::string>(), &used);
      if (used == v.get<std::string>().size()) return r;
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("config key " + key + " wants an integer");
}

bool as_bool(const Json& v, const std::string& key) {
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_number_integer()) return v.get<long>() != 0;
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
  }
  throw std::invalid_argument("config key " + key + " wants a boolean");
}

std::string as_string(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::vector<std::string> as_list(const Json& v) {
  std::vector<std::string> out;
  if (v.is_array())
    for (const auto& e : v) out.push_back(as_string(e));
  else
    out.push_back(as_string(v));
  return out;
}

void merge_config(CLI::App* leaf, const Json& cfg, Opts& o) {
  std::string cmd_path = leaf->get_name();
  for (const CLI::App* up = leaf->get_parent(); up != nullptr && up->get_parent() != nullptr;
       up = up->get_parent())
    cmd_path = up->get_name() + " " + cmd_path;
  for (const auto& [key, val] : cfg.items()) {
    if (key == "command") {
      std::string want = as_string(val);
      if (want != cmd_path && want != leaf->get_name())
        throw std::invalid_argument("config command '" + want + "' does not match '" + cmd_path +
                                    "'");
      continue;
    }
    std::string flag = key == "what" ? key : "--" + key;
    const CLI::Option* op = leaf->get_option_no_throw(flag);
    if (!op)
      throw std::invalid_argument("config key not applicable to this command: " + key);
    if (op->count() > 0) continue;  // explicit flags win over the config file
    if (key == "N") o.N = int(as_long(val, key));
    else if (key == "n") o.n = int(as_long(val, key));
    else if (key == "a") o.a = int(as_long(val, key));
    else if (key == "b") o.b = int(as_long(val, key));
    else if (key == "D") o.D = as_long(val, key);
    else if (key == "scale") o.scale = as_long(val, key);
    else if (key == "seed") o.seed = (unsigned long)as_long(val, key);
    else if (key == "triples") o.triples = int(as_long(val, key));
    else if (key == "what") o.what = as_string(val);
    else if (key == "in") o.in = as_string(val);
    else if (key == "out") o.out = as_string(val);
    else if (key == "group") o.group = as_string(val);
    else if (key == "family") o.family = as_string(val);
    else if (key == "t") o.t = as_string(val);
    else if (key == "rho") o.rho = as_string(val);
    else if (key == "lattice") o.lattice = as_string(val);
    else if (key == "rule") o.rule = as_string(val);
    else if (key == "name") o.name = as_string(val);
    else if (key == "tolerance") o.tolerance = as_string(val);
    else if (key == "perm") o.perm = as_list(val);
    else if (key == "theta") o.theta = as_list(val);
    else if (key == "antisym") o.antisym = as_bool(val, key);
    else if (key == "grouplikes") o.grouplikes = as_bool(val, key);
    else if (key == "self-duality") o.self_duality = as_bool(val, key);
    else
      throw std::invalid_argument("unknown config key: " + key);
  }
}

int axiom_exit(const qmt::AxiomReport& r) {
  return r.all_pass() ? qmt::kExitOk : qmt::kExitCheckFailed;
}

int cmd_solve_cocycle(const Opts& o) {
  qmt::PermGroup G = resolve_group(o);
  qmt::CocycleBasis basis = qmt::solve_cocycles(G, o.antisym);
  Json j;
  j["command"] = "solve-cocycle";
  j["group"] = qmt::group_to_json(G);
  j["antisym"] = o.antisym;
  j["dim"] = basis.dim;
  Json arr = Json::array();
  for (const auto& fam : basis.basis) arr.push_back(qmt::cocycle_to_json(fam));
  j["basis"] = arr;
  return emit(j, o, qmt::kExitOk);
}

int cmd_build(const Opts& o) {
  if (o.what == "dt-window") {
    long D = o.D > 0 ? o.D : 2 * o.N;
    return emit(qmt::dt_window_json(o.N, D), o, qmt::kExitOk);
  }
  qmt::Presentation P = source_presentation(o);
  if (!o.out.empty()) {
    qmt::save_presentation(o.out, P);
    Json conf;
    conf["written"] = o.out;
    conf["name"] = P.meta.name;
    conf["dim"] = P.dim;
    std::cout << conf.dump(2) << "\n";
    return qmt::kExitOk;
  }
  std::cout << qmt::presentation_to_json(P).dump(2) << "\n";
  return qmt::kExitOk;
}

int cmd_verify_hopf(const Opts& o) {
  qmt::Presentation P = source_presentation(o);
  bool has_comult = false;
  for (const auto& col : P.comult)
    if (!col.empty()) { has_comult = true; break; }
  if (!has_comult)
    throw std::invalid_argument(
        "presentation has no coalgebra data; the hopf suite needs a full presentation");
  bool has_star = false;
  for (const auto& col : P.star)
    if (!col.empty()) { has_star = true; break; }
  qmt::AxiomReport r = qmt::verify_hopf(P, has_star);
  return emit(r.to_json(), o, axiom_exit(r));
}

int cmd_verify_sequence(const Opts& o) {
  long D = o.D > 0 ? o.D : 4;
  qmt::AxiomReport r;
  if (o.family == "dt" || o.family.empty())
    r = qmt::dt_sequence_report(o.N, D);
  else if (o.family == "z3")
    r = qmt::z3_sequence_report(o.N, D);
  else
    throw std::invalid_argument("unknown sequence family: " + o.family);
  return emit(r.to_json(), o, axiom_exit(r));
}

int cmd_verify_pairing(const Opts& o) {
  Json j;
  j["command"] = "verify pairing";
  bool pass = true;
  qmt::AxiomReport pr = qmt::named_pairing_report(o.rule, o.N);
  j["pairing"] = pr.to_json();
  pass = pass && pr.all_pass();
  if (o.grouplikes) {
    qmt::AxiomReport gr = qmt::grouplike_report(o.N);
    j["grouplikes"] = gr.to_json();
    pass = pass && gr.all_pass();
  }
  if (o.self_duality) {
    qmt::SelfDuality sd = qmt::self_duality_search(o.N);
    j["self_duality"] = sd.to_json();
    // A definite answer counts: a verified isomorphism, or an explained obstruction.
    pass = pass && (sd.found ? sd.checks.all_pass() : !sd.reason.empty());
  }
  j["pass"] = pass;
  return emit(j, o, pass ? qmt::kExitOk : qmt::kExitCheckFailed);
}

int cmd_decompose(const Opts& o) {
  if (!o.tolerance.empty() && std::stod(o.tolerance) != 1e-8)
    throw std::invalid_argument("tolerance is fixed at 1e-8");
  qmt::Presentation P = source_presentation(o);
  qmt::DecompositionReport d = qmt::decompose(P, o.seed);
  Json j = d.to_json();
  j["name"] = P.meta.name;
  bool ok = d.seeds_agree && d.consistent && d.residual <= 1e-8;
  return emit(j, o, ok ? qmt::kExitOk : qmt::kExitCheckFailed);
}

int cmd_report_all(const Opts& o) {
  bool all = false;
  Json j = qmt::acceptance_report(&all);
  for (const auto& c : j["criteria"])
    std::cerr << "criterion " << c["id"].get<int>() << ": "
              << (c["pass"].get<bool>() ? "PASS" : "FAIL") << " - "
              << c["summary"].get<std::string>() << "\n";
  return emit(j, o, all ? qmt::kExitOk : qmt::kExitCheckFailed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact structure-constant presentations of quantum multiple tori: "
      "build, verify, decompose, report"};
  app.footer("Environment: QMT_THREADS sets the worker thread count (default 1).");
  app.require_subcommand(1);
  std::string config_path;

  Opts o;
  auto add_io = [&](CLI::App* c) {
    c->add_option("--out", o.out, "also write the JSON output to this file");
    c->add_option("--config", config_path,
                  "config file: 'key = value' lines or one JSON object; explicit flags win");
  };
  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", o.group, "named cyclic group Z<k> (default Z3)");
    c->add_option("--perm", o.perm,
                  "generator permutation, 0-based images '1,2,0'; repeatable, closed by BFS");
    c->add_option("--n", o.n, "degree of the permutation action");
  };
  auto add_family = [&](CLI::App* c) {
    c->add_option("--family", o.family, "cocycle family: t1 | flip | antisym | zero (default t1)");
    c->add_option("--a", o.a, "t1 parameter a (default 1)");
    c->add_option("--b", o.b, "t1 parameter b (default 2)");
    c->add_option("--t", o.t, "flip parameter, or antisym theta; rational 'p/q'");
    c->add_option("--rho", o.rho, "antisym rho; rational 'p/q'");
    c->add_option("--theta", o.theta,
                  "explicit generator form, rows ';'-separated, entries ','-separated "
                  "rationals; repeatable, one per generator");
    c->add_option("--scale", o.scale, "lattice N*Z^n scale (default --N)");
    c->add_option("--lattice", o.lattice, "lattice generator columns 'a,b;c,d'");
  };
  auto add_source = [&](CLI::App* c, bool required_what) {
    CLI::Option* w = c->add_option(
        "what", o.what, "kp | dual-w | fibration | w-sub | group | function");
    if (required_what) w->required();
    c->add_option("--N", o.N, "size parameter: root-of-unity order (default 2)");
    c->add_option("--in", o.in, "load a presentation JSON file instead of building");
    add_group(c);
    add_family(c);
  };

  CLI::App* sc = app.add_subcommand("solve-cocycle",
                                    "solve the cocycle condition over a permutation group");
  add_group(sc);
  sc->add_flag("--antisym", o.antisym, "restrict to antisymmetric forms");
  add_io(sc);

  CLI::App* b = app.add_subcommand("build",
                                   "construct a presentation or truncated window, emit JSON");
  CLI::Option* bw = b->add_option(
      "what", o.what, "kp | dual-w | fibration | w-sub | dt-window | group | function");
  bw->required();
  b->add_option("--N", o.N, "size parameter: root-of-unity order (default 2)");
  b->add_option("--D", o.D, "window depth for dt-window (default 2N)");
  b->add_option("--in", o.in, "load a presentation JSON file instead of building");
  add_group(b);
  add_family(b);
  add_io(b);

  CLI::App* v = app.add_subcommand("verify", "run a verification suite");
  v->require_subcommand(1);
  CLI::App* vh = v->add_subcommand("hopf", "Hopf *-algebra axiom suite");
  add_source(vh, false);
  add_io(vh);
  CLI::App* va = v->add_subcommand("action", "module-algebra action of the dual on the base");
  va->add_option("--N", o.N, "size parameter (default 2)");
  add_io(va);
  CLI::App* vm = v->add_subcommand("morphism", "named structure map checks");
  vm->add_option("--name", o.name, "i-dt | j-dt | j-z3 | fib-kp3 | wsub-w3")->required();
  vm->add_option("--N", o.N, "size parameter (default 2)");
  add_io(vm);
  CLI::App* vs = v->add_subcommand("sequence", "exact sequence suite");
  vs->add_option("--family", o.family, "dt | z3 (default dt)");
  vs->add_option("--N", o.N, "size parameter (default 2)");
  vs->add_option("--D", o.D, "window depth (default 4)");
  add_io(vs);
  CLI::App* vmu = v->add_subcommand("multiplier", "multiplier coproduct identities");
  vmu->add_option("--family", o.family, "dual-c | z3 (default dual-c)");
  vmu->add_option("--N", o.N, "size parameter for dual-c (default 2)");
  vmu->add_option("--D", o.D, "window depth (default 6)");
  vmu->add_option("--triples", o.triples, "random generator triples (default 50)");
  vmu->add_option("--seed", o.seed, "random seed (default 1)");
  add_io(vmu);
  CLI::App* vp = v->add_subcommand("pairing", "duality pairing identities");
  vp->add_option("--rule", o.rule, "canonical-kpw | kronecker | group-function (default canonical-kpw)");
  vp->add_option("--N", o.N, "size parameter (default 2)");
  vp->add_flag("--grouplikes", o.grouplikes, "also verify the grouplike structure on both sides");
  vp->add_flag("--self-duality", o.self_duality, "also run the exact self-duality search");
  add_io(vp);
  CLI::App* vr = v->add_subcommand("rep", "shift-operator representation window");
  vr->add_option("--N", o.N, "root-of-unity order (default 2)");
  vr->add_option("--D", o.D, "window depth (default 6)");
  add_io(vr);
  CLI::App* vl = v->add_subcommand("lie", "Lie elements and coproduct twist in the dual");
  vl->add_option("--N", o.N, "size parameter (default 2)");
  add_io(vl);
  CLI::App* vc = v->add_subcommand("commutators", "fibration commutator phase table");
  vc->add_option("--family", o.family, "z3 | flip | trivial (default z3)");
  vc->add_option("--N", o.N, "size parameter (default 2)");
  add_io(vc);

  CLI::App* d = app.add_subcommand("decompose", "exact center and numeric Wedderburn blocks");
  add_source(d, false);
  d->add_option("--seed", o.seed, "random seed for block identification (default 1)");
  d->add_option("--tolerance", o.tolerance, "idempotent residual bound; fixed at 1e-8");
  add_io(d);

  CLI::App* ra = app.add_subcommand("report-all", "run the full acceptance suite");
  add_io(ra);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qmt::kExitConfigError;
  }

  CLI::App* leaf = nullptr;
  for (CLI::App* s : app.get_subcommands()) {
    leaf = s;
    for (CLI::App* t2 : s->get_subcommands()) leaf = t2;
  }

  try {
    if (!config_path.empty()) merge_config(leaf, read_config_file(config_path), o);
    const std::string cmd = leaf->get_name();
    if (cmd == "solve-cocycle") return cmd_solve_cocycle(o);
    if (cmd == "build") return cmd_build(o);
    if (cmd == "hopf") return cmd_verify_hopf(o);
    if (cmd == "action") {
      qmt::AxiomReport r = qmt::action_report(o.N);
      return emit(r.to_json(), o, axiom_exit(r));
    }
    if (cmd == "morphism") {
      qmt::AxiomReport r = qmt::named_morphism(o.name, o.N);
      return emit(r.to_json(), o, axiom_exit(r));
    }
    if (cmd == "sequence") return cmd_verify_sequence(o);
    if (cmd == "multiplier") {
      qmt::AxiomReport r = qmt::multiplier_report(o.family.empty() ? "dual-c" : o.family, o.N,
                                                  o.D > 0 ? o.D : 6, o.triples, o.seed);
      return emit(r.to_json(), o, axiom_exit(r));
    }
    if (cmd == "pairing") return cmd_verify_pairing(o);
    if (cmd == "rep") {
      qmt::AxiomReport r = qmt::verify_rep_window(o.N, o.D > 0 ? o.D : 6);
      return emit(r.to_json(), o, axiom_exit(r));
    }
    if (cmd == "lie") {
      qmt::AxiomReport r = qmt::lie_report(o.N);
      return emit(r.to_json(), o, axiom_exit(r));
    }
    if (cmd == "commutators") {
      qmt::AxiomReport r = qmt::commutator_report(o.family.empty() ? "z3" : o.family, o.N);
      return emit(r.to_json(), o, axiom_exit(r));
    }
    if (cmd == "decompose") return cmd_decompose(o);
    if (cmd == "report-all") return cmd_report_all(o);
    throw std::invalid_argument("unknown command: " + cmd);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return qmt::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qmt::kExitConfigError;
  }
}
