#pragma once

// Command-line front end shared by tools/spinectl.cpp and the CLI tests.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "spineless/dcore.hpp"
#include "spineless/errors.hpp"
#include "spineless/families.hpp"
#include "spineless/knots.hpp"
#include "spineless/lattice.hpp"
#include "spineless/obstruct.hpp"
#include "spineless/pi1.hpp"
#include "spineless/profile_io.hpp"
#include "spineless/surgery.hpp"

namespace spineless::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kSchema = 1;

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kIndeterminate = 3 };

using Json = nlohmann::ordered_json;

inline std::string header(const std::string& command) {
  return "# spinectl " + std::string(kVersion) + "\n# command: " + command + "\n";
}

inline std::string render(const Rational& x, std::optional<unsigned> decimal) {
  if (!decimal) return x.str();
  return x.str() + " (" + x.decimal(*decimal) + ")";
}

inline std::string render_vector(const std::vector<Rational>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].str();
  return out + ")";
}

inline std::string render_vector(std::span<const Rational> xs) {
  return render_vector(std::vector<Rational>(xs.begin(), xs.end()));
}

/// Human-readable table of a profile document.
inline std::string profile_table(const ProfileDocument& doc, std::optional<unsigned> decimal) {
  std::ostringstream out;
  if (const auto* d = std::get_if<DProfile>(&doc.profile)) {
    out << "i\td(Y, s_i)\n";
    for (long i = 0; i < d->order(); ++i) out << i << '\t' << render((*d)[i], decimal) << '\n';
  } else {
    const auto& raw = std::get<RawProfile>(doc.profile);
    out << "id\td\tconj\n";
    for (std::size_t k = 0; k < raw.entries().size(); ++k)
      out << raw.entries()[k].id << '\t' << render(raw.entries()[k].value, decimal) << '\t'
          << raw.entries()[raw.conj()[k]].id << '\n';
  }
  return out.str();
}

inline Json verdict_json(const SpineVerdict& v) {
  Json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["n"] = v.n;
  Json branches = Json::array();
  for (const auto& b : v.branches) {
    Json jb;
    jb["sign"] = to_string(b.sign);
    jb["congruence_excluded"] = b.congruence_excluded();
    Json labelings = Json::array();
    for (const auto& l : b.labelings) {
      Json jl;
      Json values = Json::array();
      for (const auto& x : l.profile.values()) values.push_back(x.str());
      jl["values"] = values;
      jl["result"] = l.check.pass ? "Pass" : "Fail";
      jl["violations"] = l.check.violations;
      labelings.push_back(jl);
    }
    jb["labelings"] = labelings;
    branches.push_back(jb);
  }
  j["branches"] = branches;
  j["overall"] = to_string(v.overall);
  return j;
}

inline std::string verdict_text(const SpineVerdict& v) {
  std::ostringstream out;
  out << "n = " << v.n << '\n';
  if (v.overall == Overall::Inapplicable) {
    out << "obstruction needs n > 1\n";
  }
  for (const auto& b : v.branches) {
    out << "branch " << to_string(b.sign) << ':';
    if (b.congruence_excluded()) {
      out << " excluded by mod-2 congruences\n";
      continue;
    }
    out << '\n';
    for (const auto& l : b.labelings) {
      out << "  labeling " << render_vector(l.profile.values()) << ": ";
      if (l.check.pass) {
        out << "Pass\n";
      } else {
        out << "Fail at i =";
        for (std::size_t k = 0; k < l.check.violations.size(); ++k)
          out << (k ? ", " : " ") << l.check.violations[k];
        out << '\n';
      }
    }
  }
  out << "overall: " << to_string(v.overall) << '\n';
  return out.str();
}

struct ScanRow {
  long p = 0;
  long dYp = 0;
  Overall overall = Overall::Inapplicable;
};

/// Verdict for every (p, dYp), p-major; rows are computed concurrently and
/// returned in input order.
inline std::vector<ScanRow> scan_mp(long pmin, long pmax, const std::vector<long>& dyps) {
  if (pmin > pmax) throw InvalidInput("scan needs pmin <= pmax");
  if (dyps.empty()) throw InvalidInput("scan needs at least one d(Y_p) value");
  for (long d : dyps)
    if (d % 2 != 0) throw InvalidInput("d(Y_p) values must be even, got " + std::to_string(d));
  std::vector<ScanRow> rows;
  for (long p = pmin; p <= pmax; ++p)
    for (long d : dyps) rows.push_back({p, d, Overall::Inapplicable});
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, rows.size());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&rows, w, workers] {
      for (std::size_t k = w; k < rows.size(); k += workers)
        rows[k].overall = verdict(mp_profile({rows[k].p, rows[k].dYp})).overall;
    }));
  for (auto& j : jobs) j.get();
  return rows;
}

inline std::vector<long> non_obstructed(const std::vector<ScanRow>& rows) {
  std::vector<long> out;
  for (const auto& r : rows)
    if (r.overall != Overall::Obstructed && (out.empty() || out.back() != r.p)) out.push_back(r.p);
  return out;
}

inline bool independent_of_dyp(const std::vector<ScanRow>& rows) {
  for (const auto& a : rows)
    for (const auto& b : rows)
      if (a.p == b.p && a.overall != b.overall) return false;
  return true;
}

inline std::string scan_text(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "p\tdYp\tverdict\n";
  for (const auto& r : rows) out << r.p << '\t' << r.dYp << '\t' << to_string(r.overall) << '\n';
  out << "non-obstructed p: " << join_ints(non_obstructed(rows)) << '\n';
  out << "independent of d(Y_p): " << (independent_of_dyp(rows) ? "yes" : "no") << '\n';
  return out.str();
}

inline Json scan_json(const std::vector<ScanRow>& rows) {
  Json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  Json jr = Json::array();
  for (const auto& r : rows) jr.push_back(Json{{"p", r.p}, {"dYp", r.dYp}, {"overall", to_string(r.overall)}});
  j["rows"] = jr;
  j["non_obstructed"] = non_obstructed(rows);
  j["independent_of_dYp"] = independent_of_dyp(rows);
  return j;
}

inline std::string coset_string(const CharCoset& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.representative.size(); ++i) out += (i ? "," : "") + c.representative[i].get_str();
  return out + ")";
}

inline std::string lattice_text(const IntLattice& lattice, bool chain, SearchBudget budget) {
  std::ostringstream out;
  out << "rank " << lattice.rank() << ", |det| " << lattice.abs_det().get_str() << ", mode "
      << (chain ? "exact (-2 chain)" : "bound only") << '\n';
  out << "coset\tmax (c^2 + rank)/4\n";
  for (const auto& b : coset_bounds(lattice, budget)) out << coset_string(b.coset) << '\t' << b.value << '\n';
  return out.str();
}

inline Json pi1_json(long p, long q, long r, int leg, std::size_t limit, bool& overflow) {
  const SeifertData s = seifert_data(p, q, r);
  const FiberWord fw = fiber_word(s, leg);
  const Presentation quotient = fiber_quotient(s, leg);
  const CosetResult res = todd_coxeter(quotient, {}, limit);
  overflow = !res.enumerated();
  Json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["triple"] = {p, q, r};
  j["leg"] = leg;
  j["seifert"] = Json{{"e", s.e},
                      {"legs", Json::array({Json::array({s.legs[0].order, s.legs[0].coeff}),
                                            Json::array({s.legs[1].order, s.legs[1].coeff}),
                                            Json::array({s.legs[2].order, s.legs[2].coeff})})}};
  j["fiber_word"] = quotient.format(fw.word);
  j["a"] = fw.a;
  j["b"] = fw.b;
  j["outcome"] = res.enumerated() ? "Enumerated" : "Overflow";
  if (res.enumerated()) {
    j["order"] = res.order;
  } else {
    j["order"] = nullptr;
    j["limit"] = res.limit;
  }
  j["normally_generates"] =
      !res.enumerated() ? "indeterminate" : (res.order == 1 ? "true" : "false");
  return j;
}

inline std::vector<std::array<long, 3>> coprime_triples(long lo, long hi) {
  std::vector<std::array<long, 3>> out;
  for (long p = lo; p <= hi; ++p)
    for (long q = p + 1; q <= hi; ++q)
      for (long r = q + 1; r <= hi; ++r)
        if (std::gcd(p, q) == 1 && std::gcd(p, r) == 1 && std::gcd(q, r) == 1) out.push_back({p, q, r});
  return out;
}

/// Reproduces the computational conclusions end to end.
inline std::string full_report() {
  std::ostringstream out;
  out << "[1] lens spaces vs surgery on the unknot\n";
  for (long n = 1; n <= 8; ++n) {
    const DProfile lens = lens_n1_profile(n);
    out << "  n=" << n << ' ' << render_vector(lens.values()) << ' '
        << (niwu_profile(v_unknot(), n) == lens ? "equal" : "DIFFER") << '\n';
  }

  out << "[2] 4-surgery on the right-handed trefoil vs Q_{-3}\n";
  const DProfile trefoil = niwu_profile(v_trefoil(), 4);
  out << "  labelled " << render_vector(trefoil.values()) << '\n';
  out << "  multiset " << render_vector(trefoil.sorted_values()) << " vs "
      << render_vector(qm_profile(-3).sorted_values()) << ' '
      << (trefoil.sorted_values() == qm_profile(-3).sorted_values() ? "equal" : "DIFFER") << '\n';

  out << "[3] boundaries M_p (profiles at d(Y_p) = 0; verdicts scanned over d(Y_p) in {-4,-2,0,2,4})\n";
  const auto rows = scan_mp(-10, 10, {-4, -2, 0, 2, 4});
  for (long p = -10; p <= 10; ++p) {
    const SpineVerdict v = verdict(mp_profile({p, 0}));
    out << "  p=" << p << ' ' << render_vector(mp_profile({p, 0}).values()) << ' ' << to_string(v.overall) << '\n';
  }
  out << "  non-obstructed p: " << join_ints(non_obstructed(rows)) << '\n';
  out << "  independent of d(Y_p): " << (independent_of_dyp(rows) ? "yes" : "no") << '\n';

  out << "[4] negative-definite fillings of M_p\n";
  bool all_empty = true;
  for (long p = -10; p <= 10; ++p)
    all_empty = all_empty &&
                enumerate_labelings(RawProfile::from_labeled(mp_profile({p, 0})), Sign::NegativeDefinite).empty();
  out << "  excluded by congruences for every p in [-10, 10]: " << (all_empty ? "yes" : "no") << '\n';

  out << "[5] -2 chain lattices vs lens profiles (multisets)\n";
  for (long n = 2; n <= 9; ++n) {
    std::vector<Rational> bounds;
    for (const auto& b : coset_bounds(chain_lattice(n))) bounds.push_back(b.value);
    std::sort(bounds.begin(), bounds.end());
    const DProfile lens = lens_n1_profile(n);
    out << "  n=" << n << ' ' << render_vector(bounds) << " L(n,1): "
        << (bounds == lens.sorted_values() ? "equal" : "differ") << ", mirror: "
        << (bounds == mirror(lens).sorted_values() ? "equal" : "differ") << '\n';
  }

  out << "[6] singular fibres normally generate pi_1 of Brieskorn spheres\n";
  for (const auto& t : coprime_triples(2, 11)) {
    out << "  (" << t[0] << ',' << t[1] << ',' << t[2] << ')';
    for (int leg = 1; leg <= 3; ++leg) out << ' ' << to_string(normal_generation_check(t[0], t[1], t[2], leg));
    out << '\n';
  }
  Presentation mod_h = brieskorn_presentation(seifert_data(2, 3, 5));
  mod_h.add_relator(power(kH, 1));
  const CosetResult tri = todd_coxeter(mod_h);
  out << "  |pi_1(Sigma(2,3,5)) / <<h>>| = " << (tri.enumerated() ? std::to_string(tri.order) : "overflow") << '\n';
  return out.str();
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

inline std::vector<long> parse_triple(const std::string& text) {
  auto xs = parse_int_list(text);
  if (xs.size() != 3) throw InvalidInput("--triple expects p,q,r");
  return xs;
}

}  // namespace detail

/// Runs one spinectl invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heegaard Floer spine obstruction calculator", "spinectl"};
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string command = "spinectl";
  for (const auto& a : args) command += " " + a;

  std::optional<unsigned> decimal;
  std::string out_path;

  // profile
  auto* profile = app.add_subcommand("profile", "exact d-invariant profile of a named family");
  profile->require_subcommand(1);
  profile->fallthrough();
  profile->add_option("--decimal", decimal, "also render k decimal digits (display only)");
  profile->add_option("--out", out_path, "write the profile document here and print a table");
  long lens_n = 0, qm_m = 0, mp_p = 0, mp_dyp = 0, surgery_n = 0, torus_genus = -1;
  std::string v_list, v_file;
  bool experimental = false;
  auto* p_lens = profile->add_subcommand("lens", "L(n,1)");
  p_lens->add_option("--n", lens_n)->required();
  auto* p_qm = profile->add_subcommand("qm", "circle bundle Q_m over RP^2");
  p_qm->add_option("--m", qm_m)->required();
  auto* p_mp = profile->add_subcommand("mp", "M_p = Q_{-4p-3} # -Y_p");
  p_mp->add_option("--p", mp_p)->required();
  p_mp->add_option("--dyp", mp_dyp, "even stand-in for d(Y_p)")->capture_default_str();
  auto add_surgery_opts = [&](CLI::App* sub) {
    sub->add_option("--v", v_list, "V-sequence, comma separated");
    sub->add_option("--v-file", v_file, "profile document with a v: line");
    sub->add_option("--torus2", torus_genus, "T(2,2g+1) candidate V-sequence (needs --experimental)");
    sub->add_flag("--experimental", experimental);
    sub->add_option("--n", surgery_n)->required();
  };
  auto* p_surgery = profile->add_subcommand("surgery", "n-surgery on a knot in S^3");
  add_surgery_opts(p_surgery);

  // surgery (alias emitting the profile document)
  auto* surgery = app.add_subcommand("surgery", "profile of S^3_n(K) from its V-sequence");
  add_surgery_opts(surgery);

  // bound
  auto* bound = app.add_subcommand("bound", "two-sided bound for surgery on a knot in a homology sphere");
  std::string bound_dy = "0", bound_candidate;
  long bound_ny = 0, bound_n = 1, bound_i = 0;
  std::string bound_v;
  bound->add_option("--dy", bound_dy, "d of the ambient homology sphere")->capture_default_str();
  bound->add_option("--ny", bound_ny, "N_Y")->capture_default_str();
  bound->add_option("--v", bound_v)->required();
  bound->add_option("--n", bound_n)->required();
  bound->add_option("--i", bound_i)->required();
  bound->add_option("--candidate", bound_candidate)->required();

  // qkm
  auto* qkm = app.add_subcommand("qkm", "homology of Q_{k,m}");
  long qkm_k = 2, qkm_m = 0;
  qkm->add_option("--k", qkm_k)->required();
  qkm->add_option("--m", qkm_m)->required();

  // obstruct
  auto* obstruct = app.add_subcommand("obstruct", "spine obstruction verdict for a profile document");
  std::string profile_path;
  bool json = false;
  obstruct->add_option("--profile", profile_path)->required();
  obstruct->add_flag("--json", json);

  // scan-mp
  auto* scan = app.add_subcommand("scan-mp", "verdicts for M_p over a range of p");
  long pmin = -10, pmax = 10;
  std::string dyp_list = "0";
  scan->add_option("--pmin", pmin)->capture_default_str();
  scan->add_option("--pmax", pmax)->capture_default_str();
  scan->add_option("--dyp", dyp_list, "comma-separated even values")->capture_default_str();
  scan->add_flag("--json", json);

  // lattice
  auto* lattice = app.add_subcommand("lattice", "characteristic-coset maxima of a negative-definite lattice");
  long chain_n = 0;
  std::string gram_path;
  std::size_t budget = SearchBudget{}.max_nodes;
  auto* chain_opt = lattice->add_option("--chain", chain_n, "-2 chain with |det| n");
  auto* gram_opt = lattice->add_option("--gram", gram_path, "rank then rows of integers");
  chain_opt->excludes(gram_opt);
  lattice->add_option("--budget", budget, "enumeration budget")->capture_default_str();

  // pi1
  auto* pi1 = app.add_subcommand("pi1", "does a singular fibre normally generate pi_1(Sigma(p,q,r))?");
  std::string triple;
  int leg = 1;
  std::size_t limit = kDefaultCosetLimit;
  pi1->add_option("--triple", triple, "p,q,r")->required();
  pi1->add_option("--leg", leg)->required()->check(CLI::Range(1, 3));
  pi1->add_option("--limit", limit)->capture_default_str();

  auto* report = app.add_subcommand("report", "reproduce all computational conclusions");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  auto surgery_doc = [&]() {
    std::optional<VSequence> v;
    if (!v_list.empty()) {
      const auto values = parse_int_list(v_list);
      v = VSequence::from_values(std::span<const long>(values));
    }
    if (!v_file.empty()) {
      if (v) throw InvalidInput("give either --v or --v-file");
      const auto doc = read_profile(detail::read_file(v_file));
      if (!doc.v) throw InvalidInput("'" + v_file + "' has no v: line");
      v = doc.v;
    }
    if (torus_genus >= 0) {
      if (!experimental) throw InvalidInput("--torus2 is experimental; pass --experimental");
      if (v) throw InvalidInput("give only one V-sequence source");
      v = experimental::v_torus_two_strand(torus_genus);
    }
    if (!v) throw InvalidInput("a V-sequence is required (--v, --v-file or --torus2)");
    return ProfileDocument{niwu_profile(*v, surgery_n), v};
  };

  auto emit_document = [&](const ProfileDocument& doc) {
    if (out_path.empty()) {
      out << write_profile(doc);
    } else {
      detail::write_file(out_path, write_profile(doc));
      out << profile_table(doc, decimal);
    }
  };

  try {
    if (*profile) {
      if (*p_lens) emit_document({lens_n1_profile(lens_n), std::nullopt});
      if (*p_qm) emit_document({qm_profile(qm_m), std::nullopt});
      if (*p_mp) emit_document({mp_profile({mp_p, mp_dyp}), std::nullopt});
      if (*p_surgery) emit_document(surgery_doc());
      return kOk;
    }
    if (*surgery) {
      out << write_profile(surgery_doc());
      return kOk;
    }
    if (*bound) {
      const auto values = parse_int_list(bound_v);
      SurgeryBoundInput in{Rational::parse(bound_dy), bound_ny, VSequence::from_values(std::span<const long>(values)),
                           bound_n, bound_i};
      const Rational candidate = Rational::parse(bound_candidate);
      out << "deficit " << niwu_deficit(in, candidate) << '\n';
      out << "within [" << -2 * bound_ny << ", 0]: " << (niwu_bound_check(in, candidate) ? "true" : "false") << '\n';
      return kOk;
    }
    if (*qkm) {
      const QkmStructure s = qkm_structure(qkm_k, qkm_m);
      out << "|H^2| = " << s.order << ", cyclic: " << (s.cyclic ? "yes" : "no") << '\n';
      if (qkm_k == 2) {
        out << write_profile({qkm_profile(qkm_k, qkm_m), std::nullopt});
      } else {
        out << "d-invariants: no closed form for k > 2\n";
      }
      return kOk;
    }
    if (*obstruct) {
      const ProfileDocument doc = read_profile(detail::read_file(profile_path));
      const SpineVerdict v = verdict(doc.as_raw());
      if (json) {
        out << verdict_json(v).dump(2) << '\n';
      } else {
        out << header(command) << verdict_text(v);
      }
      return kOk;
    }
    if (*scan) {
      const auto rows = scan_mp(pmin, pmax, parse_int_list(dyp_list));
      if (json) {
        out << scan_json(rows).dump(2) << '\n';
      } else {
        out << header(command) << scan_text(rows);
      }
      return kOk;
    }
    if (*lattice) {
      if (chain_opt->count() == 0 && gram_opt->count() == 0) throw InvalidInput("give --chain or --gram");
      const bool chain = chain_opt->count() > 0;
      std::string body;
      if (chain) {
        body = lattice_text(chain_lattice(chain_n), true, {budget});
      } else {
        std::istringstream in(detail::read_file(gram_path));
        body = lattice_text(parse_gram(in), false, {budget});
      }
      out << header(command) << body;
      return kOk;
    }
    if (*pi1) {
      const auto t = detail::parse_triple(triple);
      bool overflow = false;
      const Json j = pi1_json(t[0], t[1], t[2], leg, limit, overflow);
      out << j.dump(2) << '\n';
      return overflow ? kIndeterminate : kOk;
    }
    if (*report) {
      out << header(command) << full_report();
      return kOk;
    }
  } catch (const SearchOverflow& e) {
    err << "indeterminate: " << e.what() << '\n';
    return kIndeterminate;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kOk;
}

}  // namespace spineless::cli
