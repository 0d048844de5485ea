// gstirling: command-line front end for the generalized Stirling toolkit.
//
// Exit codes: 0 all checks pass, 1 usage or resource error, 2 mathematical
// witness found, 3 internal inconsistency.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gstirling/gstirling.hpp"

using nlohmann::json;
using namespace gstirling;

namespace {

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kWitness = 2;
constexpr int kInconsistent = 3;

struct Report {
  json data;
  std::string text;
  std::optional<TriMatrix> csv;
  int code = kPass;
};

struct Global {
  std::string format = "table";
  unsigned threads = 1;
};

struct SequenceInput {
  std::string preset;
  std::string a, e;
  std::optional<std::size_t> n;
};

json strings(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

json matrix_json(const TriMatrix& mat) {
  json rows = json::array();
  for (std::size_t m = 0; m <= mat.size(); ++m) {
    const auto row = mat.row(m);
    rows.push_back(strings({row.begin(), row.end()}));
  }
  return rows;
}

json weights_json(const WeightArray& wa) {
  json rows = json::array();
  for (std::size_t m = 1; m <= wa.size(); ++m) {
    json row = json::array();
    for (std::size_t k = 1; k <= m; ++k) {
      json cell{{"value", wa(m, k).to_string()}};
      if (wa.has_labels()) cell["label"] = {wa.label(m, k).a_index, wa.label(m, k).e_index};
      row.push_back(cell);
    }
    rows.push_back(row);
  }
  return rows;
}

json minor_json(const MinorWitness& w) { return {{"rows", w.rows}, {"cols", w.cols}, {"value", w.value.to_string()}}; }

std::string minor_text(const MinorWitness& w) {
  std::ostringstream os;
  os << "rows {";
  for (std::size_t i = 0; i < w.rows.size(); ++i) os << (i ? "," : "") << w.rows[i];
  os << "} cols {";
  for (std::size_t i = 0; i < w.cols.size(); ++i) os << (i ? "," : "") << w.cols[i];
  os << "} value " << w.value.to_string();
  return os.str();
}

std::string position_text(const Position& p) { return "[" + std::to_string(p.m) + "," + std::to_string(p.k) + "]"; }

void add_sequence_options(CLI::App* cmd, SequenceInput& in) {
  auto* preset = cmd->add_option("--preset", in.preset, "binomial | stirling1 | stirling2 | lah")
                     ->check(CLI::IsMember({"binomial", "stirling1", "stirling2", "lah"}));
  auto* a = cmd->add_option("-a", in.a, "comma-separated sequence a (integers, decimals, p/q)");
  auto* e = cmd->add_option("-e", in.e, "comma-separated sequence e");
  cmd->add_option("-n", in.n, "size (required with --preset; truncates -a/-e otherwise)");
  a->needs(e);
  e->needs(a);
  preset->excludes(a);
  preset->excludes(e);
}

SequencePair read_pair(const SequenceInput& in) {
  if (!in.preset.empty()) {
    if (!in.n) throw UsageError("--preset requires -n");
    return preset(in.preset, *in.n);
  }
  if (in.a.empty() && in.e.empty()) throw UsageError("give either --preset or both -a and -e");
  std::vector<Rational> a, e;
  try {
    a = parse_rational_list(in.a);
  } catch (const ParseError& err) {
    throw UsageError(std::string("-a: ") + err.what());
  }
  try {
    e = parse_rational_list(in.e);
  } catch (const ParseError& err) {
    throw UsageError(std::string("-e: ") + err.what());
  }
  if (a.size() != e.size()) {
    throw UsageError("-a has " + std::to_string(a.size()) + " entries but -e has " + std::to_string(e.size()));
  }
  SequencePair sp(std::move(a), std::move(e));
  if (in.n) {
    if (*in.n > sp.size()) throw UsageError("-n exceeds the sequence length " + std::to_string(sp.size()));
    sp = sp.prefix(*in.n);
  }
  return sp;
}

json pair_json(const SequencePair& sp) { return {{"a", strings(sp.a())}, {"e", strings(sp.e())}, {"n", sp.size()}}; }

// ---- matrix ----

struct MatrixArgs {
  SequenceInput seq;
  std::string method = "recurrence";
  bool verify_all = false;
  bool inverse = false;
};

TriMatrix build_by(const SequencePair& sp, const std::string& method) {
  if (method == "explicit") return stirling_explicit(sp);
  if (method == "symmetric") return stirling_symmetric(sp);
  if (method == "network") return path_matrix(build_initial(sp));
  return stirling_recurrence(sp);
}

Report cmd_matrix(const MatrixArgs& args) {
  const SequencePair sp = read_pair(args.seq);
  Report r;
  r.data = {{"command", "matrix"}, {"input", pair_json(sp)}, {"method", args.method}, {"inverse", args.inverse}};
  TriMatrix mat = build_by(sp, args.method);
  std::ostringstream text;
  if (args.verify_all) {
    json routes = json::object();
    bool agree = true;
    for (const char* method : {"recurrence", "explicit", "symmetric", "network"}) {
      const auto bad = first_mismatch(mat, build_by(sp, method));
      routes[method] = !bad.has_value();
      if (bad) {
        agree = false;
        text << "route " << method << " disagrees at (" << bad->row << "," << bad->col << ")\n";
      }
    }
    const TriMatrix product = mat * stirling_inverse_explicit(sp);
    routes["inverse_identity"] = product == TriMatrix::identity(sp.size());
    agree = agree && product == TriMatrix::identity(sp.size());
    r.data["verified"] = agree;
    r.data["routes"] = routes;
    text << (agree ? "all four routes agree; S * s = I\n" : "ROUTE DISAGREEMENT\n");
    if (!agree) r.code = kInconsistent;
  }
  if (args.inverse) mat = stirling_inverse_explicit(sp);
  r.data["matrix"] = matrix_json(mat);
  r.text = render_table(mat) + text.str();
  r.csv = mat;
  return r;
}

// ---- check ----

struct CheckArgs {
  SequenceInput seq;
  bool exhaustive = false;
  bool exhaustive_only = false;
  std::optional<std::size_t> max_order;
};

Report cmd_check(const CheckArgs& args, const Global& global) {
  const SequencePair sp = read_pair(args.seq);
  const TriMatrix s = stirling_recurrence(sp);
  Report r;
  r.data = {{"command", "check"}, {"input", pair_json(sp)}};
  std::ostringstream text;

  std::optional<MinorScanReport> scan;
  if (args.exhaustive || args.exhaustive_only) {
    scan = scan_minors(s, {args.max_order, global.threads});
    json ex{{"tnn", !scan->witness.has_value()}};
    if (args.max_order) ex["max_order"] = *args.max_order;
    if (scan->witness) {
      ex["witness"] = minor_json(*scan->witness);
    } else {
      ex["evaluated"] = scan->evaluated;
      ex["structural_zeros"] = scan->structural_zeros;
    }
    r.data["exhaustive"] = ex;
  }

  if (args.exhaustive_only) {
    const bool tnn = !scan->witness;
    r.data["verdict"] = tnn ? "TNN" : "NOT_TNN";
    text << (tnn ? "TNN" : "NOT_TNN") << " (exhaustive minor scan";
    if (args.max_order) text << ", orders <= " << *args.max_order;
    text << ")\n";
    if (scan->witness) text << "negative minor: " << minor_text(*scan->witness) << '\n';
    else text << "minors evaluated: " << scan->evaluated << ", structural zeros skipped: " << scan->structural_zeros << '\n';
    r.text = text.str();
    r.code = tnn ? kPass : kWitness;
    return r;
  }

  if (!sp.a_nondecreasing()) {
    throw UsageError(
        "a is not non-decreasing. The restricted growth criterion only covers non-decreasing a; "
        "characterizing the e that give a totally non-negative matrix for general a is an open problem. "
        "Use --exhaustive-only to scan all minors instead.");
  }
  const TnnVerdict v = decide_tnn(sp);
  r.data["verdict"] = v.tnn ? "TNN" : "NOT_TNN";
  r.data["rgs"] = {{"is_rgs", v.rgs.is_rgs}, {"caps", v.rgs.cap_indices}};
  if (v.rgs.violation) r.data["rgs"]["violation"] = {{"index", v.rgs.violation->index}, {"level", v.rgs.violation->level}};

  text << (v.tnn ? "TNN" : "NOT_TNN") << '\n';
  text << "cap indices f:";
  for (auto f : v.rgs.cap_indices) text << ' ' << f;
  text << '\n';
  if (v.tnn) {
    json pivots = json::array();
    text << "pivots:";
    if (v.trace.pivots.empty()) text << " none";
    for (const Position& p : v.trace.pivots) {
      pivots.push_back({p.m, p.k});
      text << ' ' << position_text(p);
    }
    text << "\ncertificate (non-negative weights, path matrix = S):\n" << render_weight_array(v.trace.final, false);
    r.data["certificate"] = {{"pivots", pivots}, {"weights", weights_json(v.trace.final)}};
  } else {
    const EntryWitness& w = *v.witness;
    text << "e_" << v.rgs.violation->index << " exceeds its cap a_" << v.rgs.violation->level << '\n';
    text << "negative entry S(" << w.row << "," << w.col << ") = " << w.value.to_string() << '\n';
    r.data["witness"] = {{"row", w.row}, {"col", w.col}, {"value", w.value.to_string()}};
  }
  r.code = v.tnn ? kPass : kWitness;

  if (scan) {
    const bool agree = scan->witness.has_value() != v.tnn;
    if (scan->witness) text << "exhaustive scan: negative minor " << minor_text(*scan->witness) << '\n';
    else text << "exhaustive scan: no negative minor among " << scan->evaluated << " evaluated\n";
    r.data["exhaustive"]["agrees"] = agree;
    if (!agree) {
      text << "DISAGREEMENT between the criterion and the exhaustive scan\n";
      r.code = kInconsistent;
    }
  }
  r.text = text.str();
  return r;
}

// ---- network ----

struct NetworkArgs {
  SequenceInput seq;
  std::vector<std::string> pivots;
  bool certify = false;
  bool provenance = false;
  bool force = false;
};

Position parse_position(const std::string& text) {
  const auto nums = parse_integer_list(text);
  if (nums.size() != 2 || nums[0] < 1 || nums[1] < 1) throw UsageError("--pivot expects m,k with 1 <= k <= m, got '" + text + "'");
  return {static_cast<std::size_t>(nums[0]), static_cast<std::size_t>(nums[1])};
}

Report cmd_network(const NetworkArgs& args) {
  const SequencePair sp = read_pair(args.seq);
  const TriMatrix s = stirling_recurrence(sp);
  Report r;
  r.data = {{"command", "network"}, {"input", pair_json(sp)}};
  std::ostringstream text;

  WeightArray wa = build_initial(sp);
  r.data["initial"] = weights_json(wa);
  text << "initial weights:\n" << render_weight_array(wa, args.provenance);

  // Invariance is only claimed for zero-weight pivots where each one sits in
  // the triangle of the previous pivot and in a later column.
  json steps = json::array();
  bool forced = false;
  std::optional<Position> previous;
  for (const std::string& p_text : args.pivots) {
    const Position p = parse_position(p_text);
    if (p.k > p.m || p.m > sp.size()) throw UsageError("pivot position " + position_text(p) + " outside the array");
    const Rational before = wa(p.m, p.k);
    std::string objection;
    if (!before.is_zero()) {
      objection = "its weight is " + before.to_string() + ", and the path matrix is only preserved when pivoting at a zero weight";
    } else if (previous && !(in_triangle(*previous, p) && p.k > previous->k)) {
      objection = "it is not below and to the right of the previous pivot " + position_text(*previous) +
                  " (inside its triangle, in a later column), so the path matrix need not be preserved";
    }
    if (!objection.empty()) {
      if (!args.force) throw UsageError("refusing to pivot at " + position_text(p) + ": " + objection + " (use --force to pivot anyway)");
      forced = true;
    }
    wa = pivot(wa, p.m, p.k);
    previous = p;
    const bool preserved = path_matrix(wa) == s;
    steps.push_back({{"position", {p.m, p.k}}, {"weight", before.to_string()}, {"path_matrix_preserved", preserved},
                     {"weights", weights_json(wa)}});
    text << "after pivot " << position_text(p) << " (weight " << before.to_string() << "):\n"
         << render_weight_array(wa, args.provenance) << "path matrix " << (preserved ? "unchanged" : "CHANGED") << '\n';
    if (!preserved && !forced) r.code = kInconsistent;
  }
  if (!args.pivots.empty()) r.data["pivots"] = steps;

  if (args.certify) {
    if (!sp.a_nondecreasing()) throw UsageError("--certify requires a non-decreasing a");
    const PivotTrace trace = certify(sp);
    json pivots = json::array();
    text << "certify pivots:";
    if (trace.pivots.empty()) text << " none";
    for (const Position& p : trace.pivots) {
      pivots.push_back({p.m, p.k});
      text << ' ' << position_text(p);
    }
    text << '\n';
    const bool preserved = path_matrix(trace.final) == s;
    json cert{{"pivots", pivots}, {"weights", weights_json(trace.final)}, {"all_nonnegative", trace.all_nonnegative},
              {"path_matrix_preserved", preserved}};
    if (trace.violation) {
      cert["violation"] = {{"index", trace.violation->index}, {"level", trace.violation->level}};
      text << "stopped: e_" << trace.violation->index << " exceeds a_" << trace.violation->level << '\n';
    }
    text << "final weights:\n" << render_weight_array(trace.final, args.provenance);
    text << (trace.all_nonnegative ? "all weights non-negative\n" : "some weight is negative\n");
    r.data["certify"] = cert;
    if (!preserved) r.code = kInconsistent;
    else if (!trace.all_nonnegative && r.code == kPass) r.code = kWitness;
  }
  r.text = text.str();
  return r;
}

// ---- chordal ----

struct ChordalArgs {
  std::string file;
  std::string rgs;
  bool find = false;
  bool check_all = false;
};

Report cmd_chordal(const ChordalArgs& args, const Global& global) {
  Graph g;
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw UsageError("cannot open graph file '" + args.file + "'");
    g = parse_graph(in);
  } else if (!args.rgs.empty()) {
    const auto e = parse_integer_list(args.rgs);
    if (!rgs_check_integer(e)) throw UsageError("--rgs is not a restricted growth sequence");
    g = graph_from_rgs(e);
  } else {
    throw UsageError("give --file or --rgs");
  }
  Report r;
  r.data = {{"command", "chordal"}, {"vertices", g.size()}, {"edges", g.edge_count()}};
  std::ostringstream text;
  text << "graph: " << g.size() << " vertices, " << g.edge_count() << " edges\n";

  if (args.find) {
    const auto order = find_peo(g);
    if (!order) {
      r.data["peo"] = {{"is_peo", false}, {"chordal", false}};
      text << "no perfect elimination order: the graph is not chordal\n";
      r.text = text.str();
      r.code = kWitness;
      return r;
    }
    g.set_order(*order);
  }
  r.data["order"] = g.order();
  text << "order:";
  for (auto v : g.order()) text << ' ' << v;
  text << '\n';

  const PeoReport peo = verify_peo(g);
  r.data["peo"] = {{"is_peo", peo.is_peo}, {"e", peo.e_sequence}};
  text << "earlier-neighbour counts e:";
  for (long e : peo.e_sequence) text << ' ' << e;
  text << '\n';
  if (!peo.is_peo) {
    r.data["peo"]["failure"] = {{"position", peo.failure->position},
                                {"pair", {peo.failure->pair.first, peo.failure->pair.second}}};
    text << "not a perfect elimination order: v_" << peo.failure->position << " has non-adjacent earlier neighbours "
         << peo.failure->pair.first << " and " << peo.failure->pair.second << '\n';
    r.text = text.str();
    r.code = kWitness;
    return r;
  }
  text << "perfect elimination order; e is restricted growth: " << (rgs_check_integer(peo.e_sequence) ? "yes" : "NO") << '\n';

  const TriMatrix s = graph_stirling_matrix(g);
  r.data["matrix"] = matrix_json(s);
  r.csv = s;
  text << "S_G:\n" << render_table(s);
  bool ok = rgs_check_integer(peo.e_sequence);

  if (args.check_all) {
    json checks = json::object();
    if (g.size() <= kMaxBruteForceVertices) {
      bool match = true;
      for (std::size_t m = 0; m <= g.size() && match; ++m) {
        const auto row = graph_stirling_bruteforce_row(g, m);
        for (std::size_t k = 0; k <= m; ++k) match = match && s(m, k) == Rational(row[k]);
      }
      checks["bruteforce"] = match;
      text << "independent-partition brute force: " << (match ? "agrees" : "DISAGREES") << '\n';
      ok = ok && match;
    }
    if (g.size() <= kMaxColoringVertices) {
      bool colour_ok = true;
      for (std::size_t x = 1; x <= 5; ++x) colour_ok = colour_ok && chromatic_check(g, x);
      checks["chromatic"] = colour_ok;
      text << "colouring counts for x = 1..5: " << (colour_ok ? "agree" : "DISAGREE") << '\n';
      ok = ok && colour_ok;
    }
    const SignedInverseReport sign = signed_inverse_check(g, {std::nullopt, global.threads});
    checks["tnn"] = !sign.negative_minor.has_value();
    checks["sign_pattern"] = !sign.sign_violation.has_value();
    json zeros = json::array();
    for (const auto& z : sign.zero_entries) zeros.push_back({z.row, z.col});
    checks["inverse_zero_entries"] = zeros;
    text << "S_G totally non-negative: " << (sign.negative_minor ? "NO, " + minor_text(*sign.negative_minor) : "yes") << '\n';
    text << "inverse sign pattern: " << (sign.sign_violation ? "VIOLATED" : "holds") << " (" << sign.zero_entries.size()
         << " zero entries)\n";
    ok = ok && sign.passed();
    r.data["checks"] = checks;
  }
  if (!ok) r.code = kInconsistent;
  r.text = text.str();
  return r;
}

// ---- rook ----

struct RookArgs {
  std::string board;
  std::string file;
  bool check_tnn = false;
  bool check_gjw = false;
};

Report cmd_rook(const RookArgs& args, const Global& global) {
  FerrersBoard board;
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw UsageError("cannot open board file '" + args.file + "'");
    board = parse_board(in);
  } else if (!args.board.empty()) {
    board = FerrersBoard(parse_integer_list(args.board));
  } else {
    throw UsageError("give -b or --file");
  }
  const TriMatrix rm = rook_matrix(board);
  Report r;
  r.data = {{"command", "rook"}, {"heights", board.heights()}, {"sequences", pair_json(rook_sequence_pair(board))},
            {"matrix", matrix_json(rm)}};
  r.csv = rm;
  std::ostringstream text;
  text << "rook numbers, entry (m,k) = R_{m-k}(B_m):\n" << render_table(rm);

  if (args.check_gjw) {
    bool match = true, gjw = true;
    for (std::size_t m = 0; m <= board.columns(); ++m) {
      for (std::size_t k = 0; k <= m; ++k) match = match && rm(m, k) == Rational(rook_numbers_bruteforce(board, m, m - k));
      gjw = gjw && gjw_check(board, m);
    }
    r.data["bruteforce"] = match;
    r.data["gjw"] = gjw;
    text << "placement brute force: " << (match ? "agrees" : "DISAGREES") << '\n';
    text << "factorization identity: " << (gjw ? "holds" : "FAILS") << '\n';
    if (!match || !gjw) r.code = kInconsistent;
  }
  if (args.check_tnn) {
    const MinorScanReport scan = scan_minors(rm, {std::nullopt, global.threads});
    json tnn{{"tnn", !scan.witness.has_value()}};
    if (scan.witness) {
      tnn["witness"] = minor_json(*scan.witness);
      text << "NOT totally non-negative: " << minor_text(*scan.witness) << '\n';
      if (r.code == kPass) r.code = kWitness;
    } else {
      tnn["evaluated"] = scan.evaluated;
      text << "totally non-negative (" << scan.evaluated << " minors evaluated)\n";
    }
    r.data["tnn"] = tnn;
  }
  r.text = text.str();
  return r;
}

// ---- eulerian ----

struct EulerianArgs {
  std::size_t n = 7;
  std::optional<std::size_t> max_order;
};

Report cmd_eulerian(const EulerianArgs& args, const Global& global) {
  const TriMatrix a = eulerian_matrix(args.n);
  const MinorScanReport scan = scan_minors(a, {args.max_order, global.threads});
  Report r;
  r.data = {{"command", "eulerian"}, {"n", args.n}, {"matrix", matrix_json(a)}, {"tnn", !scan.witness.has_value()}};
  if (args.max_order) r.data["max_order"] = *args.max_order;
  r.csv = a;
  std::ostringstream text;
  text << "Eulerian triangle:\n" << render_table(a);
  if (scan.witness) {
    r.data["witness"] = minor_json(*scan.witness);
    text << "negative minor found: " << minor_text(*scan.witness) << '\n';
    r.code = kWitness;
  } else {
    r.data["evaluated"] = scan.evaluated;
    r.data["structural_zeros"] = scan.structural_zeros;
    text << "no negative minor found (" << scan.evaluated << " minors evaluated, " << scan.structural_zeros
         << " structural zeros skipped)\n";
  }
  r.text = text.str();
  return r;
}

// ---- audit ----

struct AuditArgs {
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t max_n = 9;
};

Report cmd_audit(const AuditArgs& args) {
  std::mt19937_64 gen(args.seed);
  auto uniform = [&](long lo, long hi) { return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1)); };
  auto rational = [&] { return Rational(mpz_class(uniform(-6, 6)), mpz_class(uniform(1, 3))); };
  std::size_t agreements = 0;
  json failures = json::array();
  for (std::size_t trial = 0; trial < args.count; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(0, static_cast<long>(args.max_n)));
    std::vector<Rational> a, e;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back(rational());
      e.push_back(rational());
    }
    const SequencePair sp(a, e);
    const TriMatrix s = stirling_recurrence(sp);
    const bool ok = s == stirling_explicit(sp) && s == stirling_symmetric(sp) && s == path_matrix(build_initial(sp)) &&
                    s * stirling_inverse_explicit(sp) == TriMatrix::identity(n);
    if (ok) ++agreements;
    else failures.push_back(pair_json(sp));
  }
  Report r;
  r.data = {{"command", "audit"}, {"seed", args.seed}, {"count", args.count}, {"agreements", agreements},
            {"failures", failures}};
  r.text = "audit seed " + std::to_string(args.seed) + ": " + std::to_string(agreements) + "/" +
           std::to_string(args.count) + " random pairs agree across all routes and the inverse identity\n";
  if (!failures.empty()) r.code = kInconsistent;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Stirling matrices, total non-negativity certificates, chordal graphs and rook boards"};
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  if (const char* env = std::getenv("GSTIRLING_FORMAT")) global.format = env;
  app.add_option("--format", global.format, "table | json | csv (default from GSTIRLING_FORMAT, else table)")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--threads", global.threads, "threads for minor scans (0 = all cores)");

  MatrixArgs matrix_args;
  auto* matrix = app.add_subcommand("matrix", "print S^{a,e} or its inverse");
  add_sequence_options(matrix, matrix_args.seq);
  matrix->add_option("--method", matrix_args.method, "recurrence | explicit | symmetric | network")
      ->check(CLI::IsMember({"recurrence", "explicit", "symmetric", "network"}));
  matrix->add_flag("--verify-all", matrix_args.verify_all, "cross-check all four construction routes");
  matrix->add_flag("--inverse", matrix_args.inverse, "print the inverse matrix s^{a,e}");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "decide total non-negativity of S^{a,e}");
  add_sequence_options(check, check_args.seq);
  auto* ex = check->add_flag("--exhaustive", check_args.exhaustive, "also scan every minor and compare");
  auto* ex_only = check->add_flag("--exhaustive-only", check_args.exhaustive_only, "only scan minors (any a)");
  ex->excludes(ex_only);
  check->add_option("--max-order", check_args.max_order, "largest minor order scanned")->check(CLI::PositiveNumber);

  NetworkArgs network_args;
  auto* network = app.add_subcommand("network", "weight arrays, pivoting and the certificate construction");
  add_sequence_options(network, network_args.seq);
  network->add_option("--pivot", network_args.pivots, "pivot at m,k (repeatable, applied in order)");
  network->add_flag("--certify", network_args.certify, "run the certificate construction");
  network->add_flag("--provenance", network_args.provenance, "annotate weights as a<i>-e<j>=value");
  network->add_flag("--force", network_args.force, "allow pivoting at a nonzero weight");

  ChordalArgs chordal_args;
  auto* chordal = app.add_subcommand("chordal", "graph Stirling numbers of a chordal graph");
  auto* file = chordal->add_option("--file", chordal_args.file, "graph file ('n <count>' then 'u v' lines)");
  auto* rgs = chordal->add_option("--rgs", chordal_args.rgs, "build the graph from a restricted growth sequence");
  file->excludes(rgs);
  chordal->add_flag("--find-peo", chordal_args.find, "reorder by maximum cardinality search");
  chordal->add_flag("--check-all", chordal_args.check_all, "brute-force, colouring, TNN and sign-pattern checks");

  RookArgs rook_args;
  auto* rook = app.add_subcommand("rook", "rook numbers of a Ferrers board");
  auto* heights = rook->add_option("-b", rook_args.board, "comma-separated non-decreasing column heights");
  auto* board_file = rook->add_option("--file", rook_args.file, "board file, one height per line");
  heights->excludes(board_file);
  rook->add_flag("--check-tnn", rook_args.check_tnn, "scan every minor of the rook matrix");
  rook->add_flag("--check-gjw", rook_args.check_gjw, "check brute-force counts and the factorization identity");

  EulerianArgs eulerian_args;
  auto* eulerian = app.add_subcommand("eulerian", "minor scan of the Eulerian triangle");
  eulerian->add_option("-n", eulerian_args.n, "largest row index (default 7)");
  eulerian->add_option("--max-order", eulerian_args.max_order, "largest minor order scanned")->check(CLI::PositiveNumber);

  AuditArgs audit_args;
  auto* audit = app.add_subcommand("audit", "seeded random cross-check of every construction route");
  audit->add_option("--seed", audit_args.seed, "random seed (default 1)");
  audit->add_option("--count", audit_args.count, "number of random pairs (default 200)");
  audit->add_option("--max-n", audit_args.max_n, "largest sequence length (default 9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kPass : kUsage;
  }

  Report report;
  try {
    if (*matrix) report = cmd_matrix(matrix_args);
    else if (*check) report = cmd_check(check_args, global);
    else if (*network) report = cmd_network(network_args);
    else if (*chordal) report = cmd_chordal(chordal_args, global);
    else if (*rook) report = cmd_rook(rook_args, global);
    else if (*eulerian) report = cmd_eulerian(eulerian_args, global);
    else report = cmd_audit(audit_args);
  } catch (const InconsistencyError& err) {
    std::cerr << "internal inconsistency: " << err.what() << '\n';
    return kInconsistent;
  } catch (const std::invalid_argument& err) {  // UsageError, ParseError, PreconditionError
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const ResourceError& err) {
    std::cerr << "resource limit: " << err.what() << '\n';
    return kUsage;
  }

  if (global.format == "json") {
    report.data["exit_code"] = report.code;
    std::cout << report.data.dump(2) << '\n';
  } else if (global.format == "csv") {
    if (!report.csv) {
      std::cerr << "error: this command has no matrix to print as csv\n";
      return kUsage;
    }
    std::cout << render_csv(*report.csv);
  } else {
    std::cout << report.text;
  }
  return report.code;
}
