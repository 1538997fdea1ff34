// qweyl command line: root-system queries, quantum Bruhat graph statistics,
// Demazure products, Newton points, Xi tables, dimension reports, and the
// named verification suites.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qweyl/suites.hpp"

using namespace qweyl;

namespace {

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(std::stoi(cur));
      cur.clear();
    }
  };
  bool has_sep = s.find(',') != std::string::npos;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      flush();
    } else if (has_sep) {
      cur += c;
    } else {
      out.push_back(c - '0');
    }
  }
  flush();
  return out;
}

QVec parse_lambda(const RootSystem& rs, const std::string& s) {
  QVec v = qvec_zero(rs.rank());
  if (s.empty()) return v;
  std::stringstream ss(s);
  std::string tok;
  int i = 1;
  while (std::getline(ss, tok, ',')) {
    if (i > rs.rank())
      throw std::invalid_argument("lambda has more coordinates than the rank");
    v[i++] = rat_parse(tok);
  }
  if (i != rs.rank() + 1)
    throw std::invalid_argument("lambda needs " + std::to_string(rs.rank()) +
                                " coordinates");
  return v;
}

nlohmann::json qvec_json(const RootSystem& rs, const QVec& v) {
  auto arr = nlohmann::json::array();
  for (int k = 1; k <= rs.rank(); ++k)
    arr.push_back({numerator(v[k]).convert_to<Int>(),
                   denominator(v[k]).convert_to<Int>()});
  return arr;
}

struct DatumArgs {
  std::string type = "A";
  int rank = 2;
  int tau = 0;
  int sigma0 = 1;

  RootSystem build() const { return build_root_system(type[0], rank); }
  FrobeniusDatum datum(const RootSystem& rs) const {
    return make_frobenius(rs, tau,
                          DiagramAutomorphism::finite_by_code(rs, sigma0));
  }
};

void add_datum_flags(CLI::App* cmd, DatumArgs& d, bool with_frob) {
  cmd->add_option("--type", d.type, "type letter A..G")->required();
  cmd->add_option("--rank", d.rank, "rank")->required();
  if (with_frob) {
    cmd->add_option("--tau", d.tau, "tau index (0 = trivial)");
    cmd->add_option("--sigma0", d.sigma0,
                    "diagram automorphism: 1 id, 2 involution, 3 triality");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact affine Weyl group engine"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: text, json or tsv")
      ->capture_default_str();

  // roots
  auto* roots = app.add_subcommand("roots", "root system data");
  DatumArgs roots_d;
  add_datum_flags(roots, roots_d, false);

  // element
  auto* element = app.add_subcommand("element", "element statistics");
  DatumArgs elt_d;
  std::string elt_word, elt_lambda;
  add_datum_flags(element, elt_d, false);
  element->add_option("--word", elt_word, "reduced word, e.g. 121");
  element->add_option("--lambda", elt_lambda,
                      "translation part, rational coroot coordinates");

  // qbg
  auto* qbg = app.add_subcommand("qbg", "quantum Bruhat graph queries");
  qbg->require_subcommand(1);
  DatumArgs qbg_d;
  std::string qbg_from, qbg_to;
  int qbg_bound = -1;
  auto* qbg_dist = qbg->add_subcommand("dist", "shortest path length");
  add_datum_flags(qbg_dist, qbg_d, false);
  qbg_dist->add_option("--from", qbg_from, "source reduced word");
  qbg_dist->add_option("--to", qbg_to, "target reduced word");
  qbg_dist->add_option("--bound", qbg_bound, "depth bound (-1 = none)");
  auto* qbg_wt = qbg->add_subcommand("wt", "shortest path weight");
  add_datum_flags(qbg_wt, qbg_d, false);
  qbg_wt->add_option("--from", qbg_from, "source reduced word");
  qbg_wt->add_option("--to", qbg_to, "target reduced word");
  auto* qbg_dotc = qbg->add_subcommand("dot", "DOT export, rank <= 3");
  add_datum_flags(qbg_dotc, qbg_d, false);

  // demazure
  auto* dem = app.add_subcommand("demazure", "Demazure product");
  DatumArgs dem_d;
  std::string a_word, a_lambda, b_word, b_lambda;
  add_datum_flags(dem, dem_d, false);
  dem->add_option("--a-word", a_word, "finite word of a");
  dem->add_option("--a-lambda", a_lambda, "translation part of a");
  dem->add_option("--b-word", b_word, "finite word of b");
  dem->add_option("--b-lambda", b_lambda, "translation part of b");

  // newton
  auto* newt = app.add_subcommand("newton", "generic Newton point");
  DatumArgs newt_d;
  std::string newt_word, newt_lambda;
  add_datum_flags(newt, newt_d, true);
  newt->add_option("--word", newt_word, "finite word");
  newt->add_option("--lambda", newt_lambda, "translation part");

  // xi
  auto* xi = app.add_subcommand("xi", "Xi_sigma defect");
  DatumArgs xi_d;
  bool xi_table = false;
  int xi_max_rank = 6;
  add_datum_flags(xi, xi_d, true);
  xi->add_flag("--table", xi_table, "emit the TSV table for the whole scope");
  xi->add_option("--max-rank", xi_max_rank, "rank bound for --table");
  xi->get_option("--type")->required(false);
  xi->get_option("--rank")->required(false);

  // dim
  auto* dim = app.add_subcommand("dim", "dimension of X(mu, b_max)");
  DatumArgs dim_d;
  std::string strategy = "rank";
  std::string dim_mu;
  bool allow_large = false;
  size_t max_group = WeylGroupTable::kDefaultCap;
  add_datum_flags(dim, dim_d, true);
  dim->add_option("--strategy", strategy, "rank, class, qbg or all")
      ->capture_default_str();
  dim->add_option("--mu", dim_mu, "optional dominant mu for nu(b_max)");
  dim->add_flag("--allow-large", allow_large, "admit E7-sized classes");
  dim->add_option("--max-group-size", max_group,
                  "cap for the qbg strategy enumeration");

  // verify
  auto* verify = app.add_subcommand("verify", "named verification suites");
  std::string suite_name;
  std::string types_csv;
  int ver_max_rank = 99;
  bool ver_allow_large = false;
  verify->add_option("suite", suite_name, "suite name or 'all'")->required();
  verify->add_option("--types", types_csv, "comma list of type letters");
  verify->add_option("--max-rank", ver_max_rank, "restrict the scope");
  verify->add_flag("--allow-large", ver_allow_large,
                   "include E7 class computations");

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (roots->parsed()) {
    RootSystem rs = roots_d.build();
    if (format == "json") {
      std::cout << root_system_json(rs) << "\n";
    } else {
      std::cout << rs.label() << ": " << rs.num_pos_roots()
                << " positive roots, |W| = " << weyl_order(rs) << "\n";
      std::cout << "two_rho = ";
      for (int j = 1; j <= rs.rank(); ++j) std::cout << rs.two_rho[j] << " ";
      std::cout << "\n";
      for (int i = 1; i <= rs.rank(); ++i)
        std::cout << "varpi_" << i
                  << "^vee = " << coweight_pretty(rs, rs.fund_coweight[i])
                  << "\n";
    }
    return 0;
  }

  if (element->parsed()) {
    RootSystem rs = elt_d.build();
    WeylElement w = from_word(rs, parse_word(elt_word));
    if (!elt_lambda.empty()) {
      ExtendedAffineElement x{parse_lambda(rs, elt_lambda), w};
      if (format == "json") {
        auto j = nlohmann::json::parse(affine_element_json(rs, x));
        j["length"] = im_length(rs, x);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "length " << im_length(rs, x) << ", omega "
                  << omega_index(rs, affine_reduced_word(rs, x).omega) << "\n";
      }
      return 0;
    }
    nlohmann::json j;
    j["word"] = reduced_word(rs, w);
    j["length"] = length(rs, w);
    j["reflection_length"] = reflection_length(rs, w);
    if (format == "json")
      std::cout << j.dump(2) << "\n";
    else
      std::cout << "length " << length(rs, w) << ", reflection length "
                << reflection_length(rs, w) << "\n";
    return 0;
  }

  if (qbg->parsed()) {
    RootSystem rs = qbg_d.build();
    if (qbg_dotc->parsed()) {
      std::cout << qbg_dot(rs);
      return 0;
    }
    WeylElement x = from_word(rs, parse_word(qbg_from));
    WeylElement y = from_word(rs, parse_word(qbg_to));
    if (qbg_dist->parsed() && qbg_bound >= 0) {
      auto d = qbg_distance_bounded(rs, x, y, qbg_bound);
      if (d)
        std::cout << *d << "\n";
      else
        std::cout << "exceeds bound " << qbg_bound << "\n";
      return 0;
    }
    QbgResult r = qbg_query(rs, x, y);
    if (format == "json") {
      nlohmann::json j;
      j["from"] = reduced_word(rs, x);
      j["to"] = reduced_word(rs, y);
      j["d"] = r.d;
      j["wt"] = std::vector<Int>(r.wt.begin() + 1, r.wt.end());
      std::cout << j.dump(2) << "\n";
    } else if (qbg_wt->parsed()) {
      std::cout << coweight_pretty(rs, to_qvec(r.wt)) << "\n";
    } else {
      std::cout << r.d << "\n";
    }
    return 0;
  }

  if (dem->parsed()) {
    RootSystem rs = dem_d.build();
    ExtendedAffineElement a{parse_lambda(rs, a_lambda),
                            from_word(rs, parse_word(a_word))};
    ExtendedAffineElement b{parse_lambda(rs, b_lambda),
                            from_word(rs, parse_word(b_word))};
    ExtendedAffineElement p = demazure_product(rs, a, b);
    if (format == "json")
      std::cout << affine_element_json(rs, p) << "\n";
    else
      std::cout << "t^(" << coweight_pretty(rs, p.lambda) << ") * w, w = "
                << [&] {
                     auto wrd = reduced_word(rs, p.w);
                     std::string s;
                     for (int i : wrd) s += std::to_string(i);
                     return s.empty() ? std::string("e") : s;
                   }()
                << ", length " << im_length(rs, p) << "\n";
    return 0;
  }

  if (newt->parsed()) {
    RootSystem rs = newt_d.build();
    FrobeniusDatum datum = newt_d.datum(rs);
    ExtendedAffineElement x{parse_lambda(rs, newt_lambda),
                            from_word(rs, parse_word(newt_word))};
    NewtonPoint np = generic_newton_point(rs, datum, x);
    if (format == "json") {
      nlohmann::json j;
      j["nu"] = qvec_json(rs, np.nu);
      j["two_rho_pairing"] = rat_str(rs.two_rho_pairing(np.nu));
      j["dominant"] = np.dominant;
      j["sigma0_invariant"] = np.sigma0_invariant;
      j["regular"] = np.regular;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "nu = " << coweight_pretty(rs, np.nu) << "  <2rho,nu> = "
                << rat_str(rs.two_rho_pairing(np.nu))
                << (np.regular ? "  (regular)" : "") << "\n";
    }
    return 0;
  }

  if (xi->parsed()) {
    if (xi_table) {
      std::cout << "type\trank\ttau\tsigma0\txi_coordinates\n";
      std::vector<std::string> rows;
      auto add = [&](char t, int n, int tau, int s0) {
        if (n > xi_max_rank) return;
        RootSystem rs = build_root_system(t, n);
        FrobeniusDatum d = make_frobenius(
            rs, tau, DiagramAutomorphism::finite_by_code(rs, s0));
        rows.push_back(xi_table_tsv_row(rs, d));
      };
      for (int n = 1; n <= 6; ++n)
        for (int i = 1; i <= n; ++i) add('A', n, i, 1);
      for (int n = 2; n <= 5; ++n) add('B', n, 1, 1);
      for (int n = 2; n <= 5; ++n) add('C', n, n, 1);
      for (int n = 4; n <= 6; ++n) {
        add('D', n, 1, 1);
        add('D', n, n, 1);
      }
      add('E', 6, 1, 1);
      add('E', 7, 7, 1);
      for (int n = 3; n <= 5; n += 2)
        for (int i = 1; i <= n; i += 2) add('A', n, i, 2);
      for (int n = 4; n <= 6; ++n) add('D', n, n, 2);
      for (const auto& row : rows) std::cout << row << "\n";
      return 0;
    }
    RootSystem rs = xi_d.build();
    FrobeniusDatum datum = xi_d.datum(rs);
    QVec v = xi_sigma(rs, datum);
    if (format == "json") {
      nlohmann::json j;
      j["xi"] = qvec_json(rs, v);
      std::cout << j.dump(2) << "\n";
    } else if (format == "tsv") {
      std::cout << xi_table_tsv_row(rs, datum) << "\n";
    } else {
      std::cout << coweight_pretty(rs, v) << "\n";
    }
    return 0;
  }

  if (dim->parsed()) {
    RootSystem rs = dim_d.build();
    FrobeniusDatum datum = dim_d.datum(rs);
    DimStrategy st = DimStrategy::rank;
    if (strategy == "class")
      st = DimStrategy::class_route;
    else if (strategy == "qbg")
      st = DimStrategy::qbg;
    else if (strategy == "all")
      st = DimStrategy::all;
    else if (strategy != "rank")
      throw CLI::ValidationError("--strategy", "unknown strategy " + strategy);
    DimOptions opts;
    opts.allow_large = allow_large;
    opts.qbg_cap = max_group;
    DimensionReport r = dim_x_mu_bmax(rs, datum, st, opts);
    if (!dim_mu.empty())
      r.nu_bmax = nu_b_max(rs, datum, parse_lambda(rs, dim_mu));
    if (!r.values_agree()) {
      std::cerr << "dimension routes disagree:\n" << report_json(rs, r) << "\n";
      return 1;
    }
    if (format == "json") {
      std::cout << report_json(rs, r) << "\n";
    } else {
      int v = r.value_rank ? *r.value_rank
                           : (r.value_class ? *r.value_class : *r.value_qbg);
      std::cout << v << "\n";
    }
    return 0;
  }

  if (verify->parsed()) {
    suites::SuiteOptions o;
    o.max_rank = ver_max_rank;
    o.allow_large = ver_allow_large;
    for (char c : types_csv)
      if (c != ',' && c != ' ') o.types.push_back(c);
    std::vector<std::string> names;
    if (suite_name == "all")
      names = suites::suite_names();
    else
      names.push_back(suite_name);
    bool all_ok = true;
    nlohmann::json jout = nlohmann::json::array();
    for (const auto& name : names) {
      suites::SuiteReport rep = suites::run_suite(name, o);
      if (format == "json") {
        for (const auto& c : rep.cases)
          jout.push_back({{"suite", rep.name},
                          {"case", c.id},
                          {"pass", c.pass},
                          {"detail", c.detail}});
      } else {
        for (const auto& c : rep.cases)
          std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << rep.name << ": "
                    << c.id << (c.detail.empty() ? "" : " — " + c.detail)
                    << "\n";
      }
      if (!rep.all_pass()) all_ok = false;
    }
    if (format == "json") std::cout << jout.dump(2) << "\n";
    return all_ok ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
