#include "superbethe/campaign.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "superbethe/bae.hpp"
#include "superbethe/dvf.hpp"
#include "superbethe/error.hpp"
#include "superbethe/lattice.hpp"
#include "superbethe/rng.hpp"
#include "superbethe/tableaux.hpp"
#include "superbethe/tsystem.hpp"

namespace superbethe {

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"jt",   "hirota",   "reductions", "vanishing",
                                              "pole-audit", "lattice", "crossing", "mixed",
                                              "ab",   "top-term", "solve-bae"};
  return names;
}

// ----------------------------------------------------------------- config

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

[[noreturn]] void bad_field(const std::string& key, const std::string& why) {
  throw Error(Errc::config_error, "field '" + key + "': " + why);
}

long long parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long n = std::stoll(v, &used);
    if (used != v.size()) bad_field(key, "not an integer: '" + v + "'");
    return n;
  } catch (const std::logic_error&) {
    bad_field(key, "not an integer: '" + v + "'");
  }
}

int parse_nonneg(const std::string& key, const std::string& v) {
  const long long n = parse_int(key, v);
  if (n < 0 || n > 1000000) bad_field(key, "out of range: " + v);
  return static_cast<int>(n);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  bad_field(key, "expected true or false, got '" + v + "'");
}

BigRational parse_q(const std::string& v) {
  BigRational q;
  if (v.empty() || q.set_str(v, 10) != 0) bad_field("q", "not a rational: '" + v + "'");
  q.canonicalize();
  if (q == 0 || q == 1 || q == -1) bad_field("q", "q must differ from 0 and +-1");
  return q;
}

}  // namespace

void CampaignConfig::set(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "preset") {
    preset = v;
  } else if (key == "r") {
    r = parse_nonneg(key, v);
  } else if (key == "s") {
    s = parse_nonneg(key, v);
  } else if (key == "q") {
    q = parse_q(v);
  } else if (key == "n_sites" || key == "n-sites") {
    n_sites = parse_nonneg(key, v);
  } else if (key == "homogeneous") {
    homogeneous = parse_bool(key, v);
  } else if (key == "sector") {
    sector.clear();
    for (const auto& part : split(v, ',')) sector.push_back(parse_nonneg(key, part));
  } else if (key == "seed") {
    const long long n = parse_int(key, v);
    if (n < 0) bad_field(key, "must be non-negative");
    seed = static_cast<std::uint64_t>(n);
  } else if (key == "shapes") {
    shapes.clear();
    for (const auto& part : split(v, ';')) {
      try {
        shapes.push_back(parse_skew_shape(part));
      } catch (const Error& e) {
        bad_field(key, e.what());
      }
    }
  } else if (key == "random_shapes" || key == "random-shapes") {
    random_shapes = parse_nonneg(key, v);
  } else if (key == "max_rows" || key == "max-rows") {
    max_rows = parse_nonneg(key, v);
  } else if (key == "max_cols" || key == "max-cols") {
    max_cols = parse_nonneg(key, v);
  } else if (key == "checks") {
    checks.clear();
    for (const auto& c : split(v, ',')) {
      if (c == "all") {
        checks.insert(checks.end(), known_checks().begin(), known_checks().end());
      } else if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end()) {
        bad_field(key, "unknown check '" + c + "'");
      } else {
        checks.push_back(c);
      }
    }
  } else if (key == "tol") {
    try {
      std::size_t used = 0;
      tol = std::stod(v, &used);
      if (used != v.size()) bad_field(key, "not a number: '" + v + "'");
    } catch (const std::logic_error&) {
      bad_field(key, "not a number: '" + v + "'");
    }
    if (!(tol > 0)) bad_field(key, "must be positive");
  } else if (key == "out") {
    out = v;
  } else if (key == "corrupt_root" || key == "corrupt-root") {
    corrupt_root = parse_bool(key, v);
  } else if (key == "a_max" || key == "a-max") {
    a_max = parse_nonneg(key, v);
  } else if (key == "lattice_sites" || key == "lattice-sites") {
    lattice_sites = parse_nonneg(key, v);
  } else if (key == "max_index" || key == "max-index") {
    max_index = parse_nonneg(key, v);
  } else {
    throw Error(Errc::config_error, "unknown key '" + key + "'");
  }
}

void CampaignConfig::validate() const {
  try {
    make_preset(preset, r, s);
  } catch (const Error& e) {
    bad_field("preset", e.what());
  }
  const int colors = make_preset(preset, r, s).colors();
  if (!sector.empty() && static_cast<int>(sector.size()) != colors) {
    bad_field("sector", "expected " + std::to_string(colors) + " counts");
  }
  if (!(tol > 0)) bad_field("tol", "must be positive");
  if (max_rows < 1 || max_cols < 1) bad_field("max_rows", "shape bounds must be positive");
}

CampaignConfig parse_config(const std::string& text) {
  CampaignConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::config_error, "line " + std::to_string(lineno) + ": expected key = value");
    }
    try {
      cfg.set(trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(Errc::config_error, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  cfg.validate();
  return cfg;
}

CampaignConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::config_error, "cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

// ----------------------------------------------------------------- report

namespace {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::skip:
      return "SKIP";
  }
  return "?";
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

bool Report::passed() const {
  return std::none_of(entries.begin(), entries.end(), [](const auto& e) { return e.verdict == Verdict::fail; });
}

std::string Report::render() const {
  std::vector<const ReportEntry*> order;
  for (const auto& e : entries) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(), [](const ReportEntry* a, const ReportEntry* b) {
    if (a->check != b->check) return a->check < b->check;
    return a->params < b->params;
  });
  std::ostringstream out;
  for (const ReportEntry* e : order) {
    out << "check=" << e->check << " params=\"" << e->params << "\" verdict=" << verdict_name(e->verdict)
        << " witness=\"" << e->witness << "\"\n";
  }
  return out.str();
}

// ----------------------------------------------------------------- checks

namespace {

struct Context {
  const CampaignConfig& cfg;
  Report& report;
  RootSystemConfig rsc;

  std::string rs_params() const { return "preset=" + cfg.preset + " r=" + std::to_string(rsc.r) + " s=" + std::to_string(rsc.s); }

  std::vector<int> sector() const {
    if (!cfg.sector.empty()) return cfg.sector;
    // unequal counts next to the odd color keep its equation u-dependent
    std::vector<int> v(static_cast<std::size_t>(rsc.colors()), 1);
    v[0] = 2;
    if (rsc.r >= 1) v[static_cast<std::size_t>(rsc.r - 1)] = 2;
    return v;
  }

  ParamLayout layout() const { return ParamLayout(cfg.n_sites, sector(), cfg.homogeneous); }

  BetheRootSet<BigRational> draw(const ParamLayout& layout, std::uint64_t salt = 0) const {
    Rng rng(cfg.seed * 1000003ULL + salt);
    return random_roots(layout, cfg.q, rng);
  }

  void add(const std::string& check, const std::string& params, Verdict v, const std::string& witness) {
    report.entries.push_back({check, params, v, witness});
  }

  void add_zero(const std::string& check, const std::string& params, const TermSum& residual,
                const Valuation<BigRational>& val) {
    const ZeroCertificate cert = certify_zero(residual, val);
    std::string w = cert.syntactic ? "residual=0 (canonical)"
                                   : "residual " + std::string(cert.zero ? "=" : "!=") + " 0 points=" +
                                         std::to_string(cert.points_evaluated) + " terms=" + std::to_string(residual.size());
    add(check, params, cert.zero ? Verdict::pass : Verdict::fail, w);
  }

  // Runs `body`, turning library errors into FAIL entries.
  void guarded(const std::string& check, const std::string& params, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      add(check, params, Verdict::fail, std::string("error ") + to_string(e.code()) + ": " + e.what());
    }
  }
};

std::vector<SkewShape> campaign_shapes(const CampaignConfig& cfg) {
  std::vector<SkewShape> shapes = cfg.shapes;
  Rng rng(cfg.seed * 7919ULL + 11);
  const int n = shapes.empty() && cfg.random_shapes == 0 ? 20 : cfg.random_shapes;
  for (int i = 0; i < n; ++i) shapes.push_back(random_skew_shape(rng, cfg.max_rows, cfg.max_cols));
  return shapes;
}

void check_jt(Context& c) {
  const ParamLayout layout = c.layout();
  const auto rs = c.draw(layout);
  const auto val = rs.valuation();
  for (const SkewShape& shape : campaign_shapes(c.cfg)) {
    const std::string params = c.rs_params() + " shape=" + shape.to_string();
    c.guarded("jt", params, [&] {
      const TermSum t = t_skew(c.rsc, layout, shape);
      const bool col = equals(t, jacobi_trudi(c.rsc, layout, shape, JtAxis::column), val);
      const bool row = equals(t, jacobi_trudi(c.rsc, layout, shape, JtAxis::row), val);
      c.add("jt", params, col && row ? Verdict::pass : Verdict::fail,
            std::string("column=") + (col ? "equal" : "differs") + " row=" + (row ? "equal" : "differs") +
                " terms=" + std::to_string(t.size()));
    });
  }
}

void check_hirota(Context& c) {
  const ParamLayout layout = c.layout();
  const auto rs = c.draw(layout);
  const auto val = rs.valuation();
  TGrid grid(c.rsc, layout);
  for (int a = 1; a <= c.rsc.r + 4; ++a) {
    for (int m = 1; m <= c.rsc.s + 4; ++m) {
      const std::string params = c.rs_params() + " a=" + std::to_string(a) + " m=" + std::to_string(m);
      c.guarded("hirota", params, [&] { c.add_zero("hirota", params, hirota_residual(grid, a, m), val); });
    }
  }
  for (int m = 1; m <= 4; ++m) {
    const std::string params = c.rs_params() + " g-identity a=1 m=" + std::to_string(m);
    c.guarded("hirota", params, [&] { c.add_zero("hirota", params, g_identity_residual(layout, 1, m), val); });
  }
}

void check_reductions(Context& c) {
  const ParamLayout layout = c.layout();
  const auto rs = c.draw(layout);
  const auto val = rs.valuation();
  TGrid grid(c.rsc, layout);
  c.guarded("reductions", c.rs_params(), [&] {
    const bool distinguished = c.cfg.preset == "distinguished-covariant";
    for (const auto& e : reduction_residuals(grid, c.cfg.max_index)) {
      const std::string params = c.rs_params() + " relation=" + e.relation + " index=" + std::to_string(e.index);
      if (!distinguished && (e.relation == "red1" || e.relation == "red2")) {
        const bool zero = certify_zero(e.residual, val).zero;
        c.add("reductions", params, Verdict::skip,
              std::string("stated for the distinguished grading; residual ") + (zero ? "= 0" : "!= 0"));
        continue;
      }
      c.add_zero("reductions", params, e.residual, val);
    }
  });
}

SkewShape shape_with_rectangle(Rng& rng, int rows, int cols) {
  const Partition lam = random_partition(rng, 2, 2);
  const int base = lam[1] + cols;
  std::vector<int> mu;
  int prev = base + static_cast<int>(rng.uniform(0, 1));
  for (int i = 1; i <= rows; ++i) {
    mu.push_back(std::max(prev, base));
    prev = mu.back();
  }
  const int tail = static_cast<int>(rng.uniform(0, 2));
  for (int i = 0; i < tail; ++i) mu.push_back(static_cast<int>(rng.uniform(1, prev)));
  std::sort(mu.begin(), mu.end(), std::greater<>());
  return SkewShape(lam, Partition(mu));
}

void check_vanishing(Context& c) {
  const int rows = c.rsc.r + 2;
  const int cols = c.rsc.s + 2;
  const ParamLayout layout = c.layout();
  const auto rs = c.draw(layout);
  const auto val = rs.valuation();
  Rng rng(c.cfg.seed * 104729ULL + 5);
  for (int i = 0; i < 10; ++i) {
    const SkewShape shape = shape_with_rectangle(rng, rows, cols);
    const std::string params = c.rs_params() + " contains shape=" + shape.to_string();
    c.guarded("vanishing", params, [&] {
      const bool rect = contains_rectangle(shape, rows, cols);
      const std::uint64_t n = count(shape, c.rsc.labels);
      const bool zero = t_skew(c.rsc, layout, shape).is_zero();
      c.add("vanishing", params, rect && n == 0 && zero ? Verdict::pass : Verdict::fail,
            "tableaux=" + std::to_string(n) + " t_skew=" + (zero ? "0" : "nonzero"));
    });
  }
  int made = 0;
  for (int attempt = 0; made < 10 && attempt < 10000; ++attempt) {
    const SkewShape shape = random_skew_shape(rng, std::min(c.cfg.max_rows, rows + 1), std::min(c.cfg.max_cols, cols + 1));
    if (contains_rectangle(shape, rows, cols)) continue;
    ++made;
    const std::string params = c.rs_params() + " free shape=" + shape.to_string();
    c.guarded("vanishing", params, [&] {
      const TermSum t = t_skew(c.rsc, layout, shape);
      BigRational value;
      BigRational x(7, 4);
      bool evaluated = false;
      for (int k = 0; k < 16 && !evaluated; ++k, x += BigRational(1, 3)) {
        try {
          value = eval(t, x, val);
          evaluated = true;
        } catch (const Error&) {
        }
      }
      const bool nonzero = evaluated && value != 0;
      c.add("vanishing", params, nonzero ? Verdict::pass : Verdict::fail,
            "value at x=" + to_string(x) + " is " + (evaluated ? to_string(value) : std::string("undefined")));
    });
  }
}

void check_pole_audit(Context& c) {
  const ParamLayout layout(c.cfg.n_sites, c.sector(), c.cfg.homogeneous);
  const auto tmpl = to_complex(c.draw(layout));
  for (int b = 1; b <= c.rsc.colors(); ++b) {
    if (layout.count(b) == 0) continue;
    const std::string params = c.rs_params() + " b=" + std::to_string(b) + " a_max=" + std::to_string(c.cfg.a_max);
    c.guarded("pole-audit", params + " enforced", [&] {
      auto sols = enforce_single_root(c.rsc, b, 1, tmpl);
      BetheRootSet<Complex> rs = sols.front();
      if (c.cfg.corrupt_root) rs.roots[static_cast<std::size_t>(b - 1)][0] *= Complex(1.001, 0.0);
      const PoleAudit audit = pole_audit(c.rsc, c.cfg.a_max, rs, b, 1);
      const bool ok = !audit.entries.empty() && audit.max_relative < c.cfg.tol;
      c.add("pole-audit", params + " enforced", ok ? Verdict::pass : Verdict::fail,
            "max_relative=" + sci(audit.max_relative) + " poles=" + std::to_string(audit.entries.size()) +
                " root=" + to_string(rs.roots[static_cast<std::size_t>(b - 1)][0]));
    });
    c.guarded("pole-audit", params + " control", [&] {
      const PoleAudit audit = pole_audit(c.rsc, c.cfg.a_max, tmpl, b, 1);
      c.add("pole-audit", params + " control", audit.max_relative > 1e-3 ? Verdict::pass : Verdict::fail,
            "max_relative=" + sci(audit.max_relative) + " (unenforced roots)");
    });
  }
}

void check_lattice(Context& c) {
  const int r = c.rsc.r;
  const int s = c.rsc.s;
  const RootSystemConfig co = distinguished_covariant(r, s);
  const BigRational& q = c.cfg.q;
  const BigRational x1(7, 3);
  const BigRational x2(-5, 11);
  const Complex qc(q.get_d(), 0.0);
  Rng rng(c.cfg.seed * 31337ULL + 1);
  for (int n = 1; n <= c.cfg.lattice_sites; ++n) {
    const std::string params = "r=" + std::to_string(r) + " s=" + std::to_string(s) + " N=" + std::to_string(n);
    std::vector<BigRational> w;
    for (int j = 0; j < n; ++j) w.emplace_back(static_cast<long>(rng.uniform(2, 40)), static_cast<unsigned long>(rng.uniform(2, 40)));
    for (auto& v : w) v.canonicalize();
    const ParamLayout vac(n, std::vector<int>(static_cast<std::size_t>(co.colors()), 0));
    BetheRootSet<BigRational> vrs;
    vrs.layout = vac;
    vrs.q = q;
    vrs.w = w;
    vrs.roots.assign(static_cast<std::size_t>(co.colors()), {});
    const TermSum t1 = t_skew(co, vac, SkewShape(Partition(std::vector<int>{1})));
    c.guarded("lattice", params + " commutator", [&] {
      if (n <= 2) {
        const auto a = transfer_matrix(r, s, n, q, x1, w);
        const auto b = transfer_matrix(r, s, n, q, x2, w);
        const double norm = commutator_norm(a, b);
        c.add("lattice", params + " commutator exact", norm == 0.0 ? Verdict::pass : Verdict::fail, "norm=" + sci(norm));
        const bool blocks = preserves_sectors(a);
        c.add("lattice", params + " sectors", blocks ? Verdict::pass : Verdict::fail, blocks ? "block diagonal" : "mixes sectors");
        const BigRational ev = pseudo_vacuum_eigenvalue(a);
        const BigRational expect = eval(t1, x1, vrs.valuation());
        c.add("lattice", params + " pseudo-vacuum exact", ev == expect ? Verdict::pass : Verdict::fail,
              "eigenvalue=" + to_string(ev) + " T1=" + to_string(expect));
      }
      std::vector<Complex> wc;
      for (const auto& v : w) wc.emplace_back(v.get_d(), 0.0);
      const Complex y1(0.9, 0.7);
      const Complex y2(-1.3, 0.2);
      const auto a = transfer_matrix(r, s, n, qc, y1, wc);
      const auto b = transfer_matrix(r, s, n, qc, y2, wc);
      const double norm = commutator_norm(a, b);
      c.add("lattice", params + " commutator float", norm < 1e-12 ? Verdict::pass : Verdict::fail, "norm=" + sci(norm));
      const Complex ev = pseudo_vacuum_eigenvalue(a);
      const Complex expect = eval(t1, y1, to_complex(vrs).valuation());
      const double rel = std::abs(ev - expect) / std::abs(expect);
      c.add("lattice", params + " pseudo-vacuum float", rel < 1e-10 ? Verdict::pass : Verdict::fail, "relative=" + sci(rel));
      if (n == 1) {
        const Complex kappa = qc - 1.0 / qc;
        auto br = [&](Complex m) { return (m - 1.0 / m) / kappa; };
        const Complex v = y1 / wc[0];
        const Complex closed = br(v * qc * qc) + static_cast<double>(r - s - 1) * br(v);
        const double d = std::abs(a.at(0, 0) - closed) / std::abs(closed);
        c.add("lattice", params + " closed form", d < 1e-12 ? Verdict::pass : Verdict::fail,
              "[u+2] + (" + std::to_string(r - s - 1) + ")[u] relative=" + sci(d));
      }
    });
  }
  // best-effort: a solved one-root sector at N = 2
  const std::string params = "r=" + std::to_string(r) + " s=" + std::to_string(s) + " N=2 spectral";
  c.guarded("lattice", params, [&] {
    std::vector<int> counts(static_cast<std::size_t>(co.colors()), 0);
    counts[0] = 1;
    BetheRootSet<Complex> tmpl;
    tmpl.layout = ParamLayout(2, counts, true);
    tmpl.q = qc;
    tmpl.w = {1.0, 1.0};
    tmpl.roots.assign(static_cast<std::size_t>(co.colors()), {});
    tmpl.roots[0] = {1.0};
    const auto sols = solve_full(co, tmpl, c.cfg.seed, {.starts = 24});
    if (sols.empty()) {
      c.add("lattice", params, Verdict::skip, "solver found no roots (best-effort)");
      return;
    }
    const std::vector<Complex> xs{Complex(1.7, 0.2), Complex(-0.6, 1.1), Complex(2.5, -0.4)};
    double worst = 0.0;
    for (const auto& so : sols) worst = std::max(worst, spectral_match(co, so, xs).max_mismatch);
    c.add("lattice", params, worst < 1e-6 ? Verdict::pass : Verdict::fail,
          "solutions=" + std::to_string(sols.size()) + " max_mismatch=" + sci(worst) + " samples=3");
  });
}

void check_crossing(Context& c) {
  const int r = c.rsc.r;
  const int s = c.rsc.s;
  const ParamLayout layout(c.cfg.n_sites, std::vector<int>(static_cast<std::size_t>(r + s + 1), 1));
  const auto val = c.draw(layout).valuation();
  for (int a = 1; a <= r + s + 2; ++a) {
    const std::string params = "r=" + std::to_string(r) + " s=" + std::to_string(s) + " a=" + std::to_string(a);
    c.guarded("crossing", params, [&] { c.add_zero("crossing", params, crossing_residual(r, s, a, layout), val); });
  }
}

void check_mixed(Context& c) {
  const int r = c.rsc.r;
  const int s = c.rsc.s;
  const std::string params = "r=" + std::to_string(r) + " s=" + std::to_string(s);
  const ParamLayout layout(0, std::vector<int>(static_cast<std::size_t>(r + s + 1), 1));
  if (r == s) {
    try {
      mixed_identity_residual(r, s, layout);
      c.add("mixed", params, Verdict::fail, "equal ranks were not rejected");
    } catch (const Error& e) {
      c.add("mixed", params, e.code() == Errc::equal_rank ? Verdict::pass : Verdict::fail,
            std::string("rejected: ") + to_string(e.code()));
    }
    return;
  }
  const auto val = c.draw(layout).valuation();
  c.guarded("mixed", params, [&] { c.add_zero("mixed", params, mixed_identity_residual(r, s, layout), val); });
}

void check_ab(Context& c) {
  const RootSystemConfig co = distinguished_covariant(c.rsc.r, c.rsc.s);
  const ParamLayout layout(0, c.sector());
  const auto val = c.draw(layout).valuation();
  for (int n = 1; n <= c.cfg.max_index; ++n) {
    for (auto [kind, name] : {std::pair{SeriesKind::column, "column"}, {SeriesKind::row, "row"}}) {
      const std::string params = c.rs_params() + " " + name + " n=" + std::to_string(n);
      c.guarded("ab", params, [&] { c.add_zero("ab", params, convolution_residual(co, layout, kind, n), val); });
    }
  }
}

void check_top_term(Context& c) {
  const RootSystemConfig co = distinguished_covariant(c.rsc.r, c.rsc.s);
  const ParamLayout layout(0, c.sector());
  const auto val = c.draw(layout).valuation();
  Rng rng(c.cfg.seed * 65537ULL + 3);
  int made = 0;
  for (int attempt = 0; made < 10 && attempt < 10000; ++attempt) {
    const Partition mu = random_partition(rng, c.cfg.max_rows, c.cfg.max_cols);
    if (mu.empty() || mu[co.r + 2] > co.s + 1) continue;
    ++made;
    const std::string params = c.rs_params() + " mu=" + mu.to_string();
    c.guarded("top-term", params, [&] {
      const BigRational lim = limit_at_infinity(top_term(co, layout, mu), val);
      const BigRational expect = top_term_expected(co, layout, mu, c.cfg.q);
      c.add("top-term", params, lim == expect ? Verdict::pass : Verdict::fail,
            "limit=" + to_string(lim) + " expected=" + to_string(expect));
    });
  }
}

void check_solve_bae(Context& c) {
  const ParamLayout layout(c.cfg.n_sites, c.sector(), c.cfg.homogeneous);
  auto tmpl = to_complex(c.draw(layout));
  if (c.cfg.homogeneous) tmpl.w.assign(static_cast<std::size_t>(c.cfg.n_sites), 1.0);
  std::string sec;
  for (int n : layout.counts()) sec += (sec.empty() ? "" : ",") + std::to_string(n);
  const std::string params = c.rs_params() + " N=" + std::to_string(c.cfg.n_sites) + " sector=" + sec;
  c.guarded("solve-bae", params, [&] {
    const auto sols = solve_full(c.rsc, tmpl, c.cfg.seed);
    if (sols.empty()) {
      c.add("solve-bae", params, Verdict::skip, "no converged solution (best-effort)");
      return;
    }
    for (std::size_t i = 0; i < sols.size(); ++i) {
      const double res = max_bae_residual(c.rsc, sols[i]);
      std::string roots;
      for (const auto& col : sols[i].roots) {
        for (const auto& y : col) roots += (roots.empty() ? "" : " ") + to_string(y);
        roots += " |";
      }
      c.add("solve-bae", params + " solution=" + std::to_string(i + 1), res < 1e-10 ? Verdict::pass : Verdict::fail,
            "max_residual=" + sci(res) + " y=" + roots);
    }
  });
}

}  // namespace

void run_check(const CampaignConfig& cfg, const std::string& name, Report& report) {
  static const std::map<std::string, std::function<void(Context&)>> table{
      {"jt", check_jt},
      {"hirota", check_hirota},
      {"reductions", check_reductions},
      {"vanishing", check_vanishing},
      {"pole-audit", check_pole_audit},
      {"lattice", check_lattice},
      {"crossing", check_crossing},
      {"mixed", check_mixed},
      {"ab", check_ab},
      {"top-term", check_top_term},
      {"solve-bae", check_solve_bae},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw Error(Errc::config_error, "unknown check '" + name + "'");
  Context c{cfg, report, make_preset(cfg.preset, cfg.r, cfg.s)};
  it->second(c);
}

Report run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  Report report;
  for (const auto& name : cfg.checks) run_check(cfg, name, report);
  return report;
}

}  // namespace superbethe
