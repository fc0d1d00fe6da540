#include "linea/filtration.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

namespace linea {

namespace {

const MonomialOrder kOrd = MonomialOrder::grevlex();

// Exact row space with RREF rows; canonical key for deduplication.
class LinSpan {
 public:
  explicit LinSpan(int nvars) : nv_(nvars) {}

  bool insert(std::vector<Rat> v) {
    reduce(v);
    int lead = 0;
    while (lead < nv_ && v[lead] == 0) ++lead;
    if (lead == nv_) return false;
    Rat inv = Rat(1) / v[lead];
    for (auto& x : v) x *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rat f = rows_[r][lead];
      if (f == 0) continue;
      for (int j = 0; j < nv_; ++j) rows_[r][j] -= f * v[j];
    }
    std::size_t pos = 0;
    while (pos < rows_.size() && lead_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    lead_.insert(lead_.begin() + pos, lead);
    return true;
  }

  void insert_form(const Polynomial& f) {
    insert(linear_form_coeffs(f, nv_));
  }

  bool contains(std::vector<Rat> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
  }

  int dim() const { return int(rows_.size()); }
  const std::vector<int>& leads() const { return lead_; }

  std::string key() const {
    std::string k;
    for (const auto& row : rows_) {
      for (const auto& x : row) k += rat_to_string(x) + ",";
      k += ";";
    }
    return k;
  }

  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

 private:
  void reduce(std::vector<Rat>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rat& c = v[lead_[r]];
      if (c == 0) continue;
      Rat f = c;
      for (int j = 0; j < nv_; ++j) v[j] -= f * rows_[r][j];
    }
  }

  int nv_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> lead_;
};

// Substitution eliminating the span's pivot variables: for each RREF row
// with pivot p, x_p maps to x_p minus the row's form.
struct SubstContext {
  std::vector<Polynomial> store;
  std::vector<const Polynomial*> image;

  Polynomial apply(const Polynomial& p) const {
    return p.substituted(image, kOrd);
  }
};

SubstContext make_context(const LinSpan& span, int nvars) {
  SubstContext ctx;
  ctx.image.assign(nvars, nullptr);
  ctx.store.reserve(span.rows().size());
  for (std::size_t r = 0; r < span.rows().size(); ++r) {
    int p = span.leads()[r];
    std::vector<Term> terms;
    for (int v = 0; v < nvars; ++v) {
      if (v == p) continue;
      const Rat& c = span.rows()[r][v];
      if (c != 0) terms.push_back({Monomial::var(v, nvars), -c});
    }
    ctx.store.push_back(
        Polynomial::from_terms(nvars, std::move(terms), kOrd));
  }
  for (std::size_t r = 0; r < span.rows().size(); ++r)
    ctx.image[span.leads()[r]] = &ctx.store[r];
  return ctx;
}

void parallel_for_steps(std::size_t count, int jobs,
                        const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::size_t workers = std::min<std::size_t>(std::size_t(jobs), count);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next.fetch_add(1); k < count;
           k = next.fetch_add(1))
        fn(k);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

const FiltrationIdeal* Filtration::find(const std::string& id) const {
  for (const auto& fi : ideals)
    if (fi.id == id) return &fi;
  return nullptr;
}

FiltrationReport verify_filtration(const Ideal& J, const Filtration& F,
                                   const VerifyOptions& opts) {
  const int nv = J.nvars;
  FiltrationReport report;
  report.ideal_count = F.ideals.size();

  std::map<std::string, const FiltrationIdeal*> byid;
  for (const auto& fi : F.ideals) {
    if (byid.count(fi.id))
      report.structural_errors.push_back("duplicate ideal id: " + fi.id);
    byid[fi.id] = &fi;
    for (const auto& g : fi.gens)
      if (g.degree() != 1)
        report.structural_errors.push_back("non-linear generator in " + fi.id);
  }

  GroebnerBasis GJ = buchberger(J, kOrd);
  LinSpan j1(nv);
  for (const auto& e : GJ.elements())
    if (e.degree() == 1) j1.insert_form(e);

  bool has_zero = false, has_max = false;
  for (const auto& fi : F.ideals) {
    if (fi.gens.empty()) has_zero = true;
    LinSpan s = j1;
    for (const auto& g : fi.gens) s.insert_form(g);
    if (s.dim() == nv) has_max = true;
  }
  if (!has_zero) report.structural_errors.push_back("zero ideal missing");
  if (!has_max)
    report.structural_errors.push_back("maximal ideal missing");

  std::map<std::string, int> step_count;
  for (const auto& st : F.steps) {
    for (const std::string* id : {&st.ideal, &st.sub, &st.colon})
      if (!byid.count(*id))
        report.structural_errors.push_back("unknown ideal id: " + *id);
    if (st.gen.degree() != 1)
      report.structural_errors.push_back("non-linear step generator for " +
                                         st.ideal);
    step_count[st.ideal]++;
  }
  for (const auto& fi : F.ideals)
    if (!fi.gens.empty() && step_count[fi.id] == 0)
      report.structural_errors.push_back("no step for ideal " + fi.id);

  if (!report.structural_errors.empty()) {
    report.accepted = false;
    return report;
  }

  report.steps.resize(F.steps.size());
  parallel_for_steps(F.steps.size(), opts.jobs, [&](std::size_t k) {
    const FiltrationStep& st = F.steps[k];
    StepCheck check;
    check.ideal = st.ideal;
    check.sub = st.sub;
    check.colon = st.colon;
    const FiltrationIdeal* sub = byid.at(st.sub);
    const FiltrationIdeal* ideal = byid.at(st.ideal);
    const FiltrationIdeal* target = byid.at(st.colon);

    LinSpan sub_span(nv);
    for (const auto& g : sub->gens) sub_span.insert_form(g);

    // (a) ideal = sub + (gen), strictly larger by one form modulo J_1.
    LinSpan grown = j1;
    for (const auto& g : sub->gens) grown.insert_form(g);
    int base_dim = grown.dim();
    grown.insert(linear_form_coeffs(st.gen, nv));
    bool strict = grown.dim() == base_dim + 1;
    bool covers = true;
    for (const auto& g : ideal->gens)
      if (!grown.contains(linear_form_coeffs(g, nv))) covers = false;
    LinSpan ideal_span = j1;
    for (const auto& g : ideal->gens) ideal_span.insert_form(g);
    check.span_ok =
        strict && covers && ideal_span.dim() == grown.dim();
    if (!check.span_ok) {
      check.note = "ideal is not sub + (gen)";
      report.steps[k] = std::move(check);
      return;
    }

    // (c) colon: compute (J + sub) : gen after modding out sub's span.
    LinSpan colon_span = j1;
    for (const auto& g : target->gens) colon_span.insert_form(g);
    bool target_contains_sub = true;
    for (const auto& g : sub->gens)
      if (!colon_span.contains(linear_form_coeffs(g, nv)))
        target_contains_sub = false;
    if (!target_contains_sub) {
      check.colon_ok = false;
      check.note = "colon target does not contain sub";
      report.steps[k] = std::move(check);
      return;
    }

    SubstContext ctx = make_context(sub_span, nv);
    std::vector<Polynomial> jg;
    for (const auto& g : J.gens) {
      Polynomial h = ctx.apply(g);
      if (!h.is_zero()) jg.push_back(std::move(h));
    }
    Polynomial gbar = ctx.apply(st.gen);
    if (gbar.is_zero()) {
      check.colon_ok = false;
      check.note = "generator lies in sub";
      report.steps[k] = std::move(check);
      return;
    }
    Ideal reduced_J(nv, jg);
    Ideal C = colon(reduced_J, gbar, kOrd);
    std::vector<Polynomial> tg = jg;
    for (const auto& g : target->gens) {
      Polynomial h = ctx.apply(g);
      if (!h.is_zero()) tg.push_back(std::move(h));
    }
    Ideal T(nv, std::move(tg));
    check.colon_ok = ideal_equal(C, T, kOrd);
    if (!check.colon_ok) check.note = "colon mismatch";

    if (opts.cross_check_full_ring) {
      Ideal A = ideal_sum(J, Ideal(nv, sub->gens));
      Ideal B = ideal_sum(J, Ideal(nv, ideal->gens));
      Ideal full = colon_ideal(A, B, kOrd);
      Ideal lifted = ideal_sum(J, Ideal(nv, target->gens));
      bool full_ok = ideal_equal(full, lifted, kOrd);
      if (full_ok != check.colon_ok)
        check.note += " [context and full-ring colons disagree]";
    }
    report.steps[k] = std::move(check);
  });

  report.accepted = std::all_of(
      report.steps.begin(), report.steps.end(),
      [](const StepCheck& c) { return c.span_ok && c.colon_ok; });
  return report;
}

namespace {

std::string mask_id(std::uint32_t mask, std::uint32_t full) {
  if (mask == 0) return "zero";
  if (mask == full) return "m";
  std::string id = "v";
  for (int v = 0; v < 32; ++v)
    if (mask & (1u << v)) id += std::to_string(v) + "_";
  id.pop_back();
  return id;
}

}  // namespace

Filtration quadratic_monomial_filtration(const Ideal& J) {
  const int nv = J.nvars;
  std::vector<std::vector<bool>> quad(nv, std::vector<bool>(nv, false));
  std::uint32_t linmask = 0;  // variables already in J vanish in R
  for (const auto& g : J.gens) {
    if (g.terms().size() != 1 || g.degree() > 2)
      throw input_error("needs a quadratic monomial ideal");
    const Monomial& m = g.leading_monomial();
    std::vector<int> vars;
    for (int v = 0; v < nv; ++v)
      for (int k = 0; k < m.e[v]; ++k) vars.push_back(v);
    if (vars.size() == 1) {
      linmask |= (1u << vars[0]);
    } else {
      quad[vars[0]][vars[1]] = quad[vars[1]][vars[0]] = true;
    }
  }
  const std::uint32_t full = ((1u << nv) - 1) & ~linmask;

  auto colon_mask = [&](std::uint32_t sub, int j) {
    std::uint32_t t = sub;
    for (int v = 0; v < nv; ++v)
      if (quad[v][j]) t |= (1u << v);
    if (quad[j][j]) t |= (1u << j);
    return t & ~linmask;
  };

  Filtration F;
  F.nvars = nv;
  std::map<std::uint32_t, bool> present;
  std::vector<std::uint32_t> work;
  auto add_member = [&](std::uint32_t mask) {
    mask &= ~linmask;
    if (present.count(mask)) return;
    present[mask] = true;
    FiltrationIdeal fi;
    fi.id = mask_id(mask, full);
    for (int v = 0; v < nv; ++v)
      if (mask & (1u << v)) fi.gens.push_back(Polynomial::variable(v, nv));
    F.ideals.push_back(std::move(fi));
    if (mask != 0) work.push_back(mask);
  };

  std::uint32_t chain = 0;
  add_member(0);
  for (int v = 0; v < nv; ++v) {
    if (linmask & (1u << v)) continue;
    chain |= (1u << v);
    add_member(chain);
  }
  while (!work.empty()) {
    std::uint32_t mask = work.back();
    work.pop_back();
    int j = 31 - __builtin_clz(mask);
    std::uint32_t sub = mask & ~(1u << j);
    std::uint32_t target = colon_mask(sub, j);
    add_member(sub);
    add_member(target);
    F.steps.push_back(
        {mask_id(mask, full), mask_id(sub, full), mask_id(target, full),
         Polynomial::variable(j, nv)});
  }
  return F;
}

namespace {

struct ChainBuilder {
  int nv;
  Filtration* F;
  std::map<std::string, std::string> seen;  // span key -> id
  int counter = 0;

  std::string member(const std::vector<Polynomial>& gens) {
    LinSpan span(nv);
    for (const auto& g : gens) span.insert_form(g);
    std::string key = span.key();
    auto it = seen.find(key);
    if (it != seen.end()) return it->second;
    std::string id;
    if (gens.empty())
      id = "zero";
    else if (span.dim() == nv)
      id = "m";
    else
      id = "c" + std::to_string(counter++);
    seen[key] = id;
    F->ideals.push_back({id, gens});
    return id;
  }

  void step(const std::string& ideal, const std::string& sub,
            const Polynomial& gen, const std::string& colon) {
    F->steps.push_back({ideal, sub, colon, gen});
  }
};

// Linear forms of the reduced Groebner basis of a colon ideal, checked to
// contain the expected base forms; the completion beyond the base is
// returned separately (the z / y forms of the construction).
struct ColonLinearPart {
  LinSpan span;
  std::vector<Polynomial> extras;
};

ColonLinearPart colon_linear_part(const Ideal& C,
                                  const std::vector<Polynomial>& base,
                                  int nv) {
  GroebnerBasis G = buchberger(C, kOrd);
  LinSpan all(nv);
  std::vector<Polynomial> linear;
  for (const auto& e : G.elements())
    if (e.degree() == 1) {
      all.insert_form(e);
      linear.push_back(e);
    }
  LinSpan have(nv);
  for (const auto& f : base) {
    if (!all.contains(linear_form_coeffs(f, nv)))
      throw input_error(
          "staircase colon misses an expected linear form; reseed");
    have.insert_form(f);
  }
  ColonLinearPart out{all, {}};
  for (const auto& f : linear)
    if (have.insert(linear_form_coeffs(f, nv))) out.extras.push_back(f);
  return out;
}

}  // namespace

ConstructedFiltration construct_staircase_filtration(int m, int n,
                                                     std::uint64_t seed) {
  if (m < 2 || n < 3)
    throw input_error("staircase filtration needs m >= 2, n >= 3");
  if (2 * m <= n + 1) {
    LineArrangement A = staircase_monomial(m, n);
    Ideal J = defining_ideal(A, kOrd);
    return {A, J, quadratic_monomial_filtration(J)};
  }
  if (m % 2 == 0 ? (m + 1 > n) : (m + 2 > n))
    throw input_error("no filtration construction for these parameters");

  LineArrangement A = staircase_mixed(m, n, seed);
  Ideal J = defining_ideal(A, kOrd);
  const int nv = n + 1;
  const int k_mono = (m + 1) / 2, k_gen = m / 2;
  const int p = n - 2 * k_mono, q = n - 2 * k_gen;

  std::vector<Polynomial> xs, ls;
  for (int i = 0; i <= p; ++i) xs.push_back(Polynomial::variable(i, nv));
  for (int j = 0; j <= q; ++j) ls.push_back(A.lines[k_mono].forms[j]);

  // Linear parts of the two colon ideals drive the chain completions.
  Ideal j_x0 = ideal_sum(J, Ideal(nv, {xs[0]}));
  Ideal c_x = colon(j_x0, Polynomial::variable(1, nv), kOrd);
  std::vector<Polynomial> base_x = ls;
  base_x.push_back(xs[0]);
  ColonLinearPart zpart = colon_linear_part(c_x, base_x, nv);
  if (zpart.span.dim() != nv - k_gen)
    throw input_error("unexpected colon rank on the x side; reseed");

  Ideal j_l0 = ideal_sum(J, Ideal(nv, {ls[0]}));
  Ideal c_l = colon(j_l0, ls[1], kOrd);
  std::vector<Polynomial> base_l = xs;
  base_l.push_back(ls[0]);
  ColonLinearPart ypart = colon_linear_part(c_l, base_l, nv);
  if (ypart.span.dim() != nv - k_mono)
    throw input_error("unexpected colon rank on the l side; reseed");

  ConstructedFiltration out{A, J, Filtration{}};
  out.filtration.nvars = nv;
  ChainBuilder cb{nv, &out.filtration, {}, 0};

  std::string zero = cb.member({});

  // One chain: prefixes of `first`, then bridge0, extras, bridge1, and
  // coordinate completions up to the maximal ideal.
  auto build_chain = [&](const std::vector<Polynomial>& first,
                         const Polynomial& bridge0, const Polynomial& bridge1,
                         const std::vector<Polynomial>& extras,
                         const std::string& opposite_prefix_full,
                         const std::string& opposite_pre_bridge1) {
    std::vector<Polynomial> cur;
    std::string prev = zero;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < first.size(); ++i) {
      cur.push_back(first[i]);
      std::string id = cb.member(cur);
      if (i == 0)
        cb.step(id, prev, first[i], opposite_prefix_full);
      else if (i == 1)
        cb.step(id, prev, first[i], opposite_pre_bridge1);
      else
        cb.step(id, prev, first[i], "m");
      ids.push_back(id);
      prev = id;
    }
    std::string prefix_full = prev;
    cur.push_back(bridge0);
    prev = [&] {
      std::string id = cb.member(cur);
      cb.step(id, prefix_full, bridge0, prefix_full);
      return id;
    }();
    for (const auto& e : extras) {
      cur.push_back(e);
      std::string id = cb.member(cur);
      cb.step(id, prev, e, "m");
      prev = id;
    }
    std::string pre_bridge1 = prev;
    cur.push_back(bridge1);
    {
      std::string id = cb.member(cur);
      cb.step(id, prev, bridge1, pre_bridge1);
      prev = id;
    }
    LinSpan span(nv);
    for (const auto& g : cur) span.insert_form(g);
    for (int v = 0; v < nv && span.dim() < nv; ++v) {
      std::vector<Rat> coords(nv, Rat(0));
      coords[v] = 1;
      if (!span.insert(coords)) continue;
      cur.push_back(Polynomial::variable(v, nv));
      std::string id = cb.member(cur);
      cb.step(id, prev, Polynomial::variable(v, nv), "m");
      prev = id;
    }
    return std::pair<std::string, std::string>{prefix_full, pre_bridge1};
  };

  // Ids of the opposite chain's members are needed before that chain is
  // built, so pre-compute the two referenced members of each chain.
  auto span_id = [&](std::vector<Polynomial> gens) { return cb.member(gens); };
  std::vector<Polynomial> l_prefix = ls;
  std::vector<Polynomial> x_prefix = xs;
  std::string l_prefix_id = span_id(l_prefix);
  std::string x_prefix_id = span_id(x_prefix);
  std::vector<Polynomial> vl = ls;  // l's, x0, z's: the x1-colon
  vl.push_back(xs[0]);
  for (const auto& z : zpart.extras) vl.push_back(z);
  std::string vl_id = span_id(vl);
  std::vector<Polynomial> vx = xs;  // x's, l0, y's: the l1-colon
  vx.push_back(ls[0]);
  for (const auto& y : ypart.extras) vx.push_back(y);
  std::string vx_id = span_id(vx);

  build_chain(xs, ls[0], ls[1], ypart.extras, l_prefix_id, vl_id);
  build_chain(ls, xs[0], Polynomial::variable(1, nv), zpart.extras,
              x_prefix_id, vx_id);
  return out;
}

namespace {

std::string substitute_tokens(std::string s, const Rat& a, const Rat& b) {
  auto replace_all = [&](const std::string& from, const std::string& to) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
      s.replace(pos, from.size(), to);
      pos += to.size();
    }
  };
  replace_all("A", rat_to_string(Rat(1) / a));
  replace_all("B", rat_to_string(Rat(1) / b));
  replace_all("a", rat_to_string(a));
  replace_all("b", rat_to_string(b));
  return s;
}

}  // namespace

Filtration five_p6_filtration(const Rat& a, const Rat& b) {
  if (a == 0 || b == 0) throw input_error("parameters must be nonzero");
  const int nv = 7;
  // Generators per member; A = 1/a, B = 1/b.
  static const std::vector<std::vector<const char*>> kIdeals = {
      /* F01 */ {},
      /* F02 */ {"x0"},
      /* F03 */ {"x2"},
      /* F04 */ {"x0", "x4"},
      /* F05 */ {"x0", "x1"},
      /* F06 */ {"x2", "x3"},
      /* F07 */ {"x0", "x6"},
      /* F08 */ {"x0", "x2", "x3"},
      /* F09 */ {"x2", "x3", "x0+x1+x4+x5+x6"},
      /* F10 */ {"x0", "x4", "x5"},
      /* F11 */ {"x0", "x1", "x2"},
      /* F12 */ {"x0", "x3", "x4"},
      /* F13 */ {"x0", "x1", "x4"},
      /* F14 */ {"x0", "x2", "x4"},
      /* F15 */ {"x0", "x2", "x6"},
      /* F16 */ {"x0", "x1", "x5"},
      /* F17 */ {"x0", "x1", "x2", "x3+b*x4+x5+b*x6"},
      /* F18 */ {"x0", "x1", "x2", "x3+b*x4+x5+A*x6"},
      /* F19 */ {"x0", "x3", "x4", "x6"},
      /* F20 */ {"x0", "x1", "x4", "x5"},
      /* F21 */ {"x0", "x1", "x4", "x2+a*x3+a*x5+x6"},
      /* F22 */ {"x0", "x2", "x4", "x6"},
      /* F23 */ {"x0", "x1", "x2", "x6"},
      /* F24 */ {"x0", "x2", "x3", "x6"},
      /* F25 */ {"x0", "x1", "x5", "x6"},
      /* F26 */ {"x0", "x1", "x2", "x5"},
      /* F27 */ {"x0", "x4", "x5", "x6"},
      /* F28 */ {"x0", "x1", "x5", "x2+a*x3+x4+x6"},
      /* F29 */ {"x0", "x1", "x2", "x5", "x3+b*x4+b*x6"},
      /* F30 */ {"x0", "x2", "x4", "x6", "x1+x3+x5"},
      /* F31 */ {"x0", "x2", "x3", "x6", "x4+B*x5"},
      /* F32 */ {"x0", "x3", "x4", "x5", "x6"},
      /* F33 */ {"x0", "x1", "x2", "x6", "x3+b*x4+x5"},
      /* F34 */ {"x0", "x1", "x2", "x4", "x5"},
      /* F35 */ {"x0", "x2", "x3", "x4", "x6"},
      /* F36 */ {"x0", "x1", "x2", "x3", "x5"},
      /* F37 */ {"x0", "x1", "x2", "x5", "x3+A*x4+A*x6"},
      /* F38 */ {"x0", "x1", "x2", "x5", "x3+b*x4+A*x6"},
      /* F39 */ {"x0", "x1", "x3", "x4", "x5"},
      /* F40 */ {"x0", "x1", "x2", "x6", "x3+b*x4"},
      /* F41 */ {"x0", "x1", "x4", "x5", "x2+a*x3+x6"},
      /* F42 */ {"x0", "x1", "x5", "x6", "x3+b*x4"},
      /* F43 */ {"x0", "x1", "x4", "x5", "x6"},
      /* F44 */ {"x0", "x1", "x2", "x5", "x6"},
      /* F45 */ {"x0", "x1", "x2", "x4", "x6"},
      /* F46 */ {"x0", "x1", "x2", "x6", "x3+b*x4+x5"},
      /* F47 */ {"x0", "x1", "x2", "x4", "x5", "x3+A*x6"},
      /* F48 */ {"x0", "x1", "x2", "x3", "x5", "x4+x6"},
      /* F49 */ {"x0", "x1", "x3", "x4", "x5", "x2+x6"},
      /* F50 */ {"x0", "x1", "x3", "x4", "x5", "x6"},
      /* F51 */ {"x0", "x2", "x3", "x4", "x5", "x6"},
      /* F52 */ {"x0", "x2", "x3", "x4", "x6", "x1+x5"},
      /* F53 */ {"x0", "x1", "x2", "x3", "x6", "x4+B*x5"},
      /* F54 */ {"x0", "x1", "x4", "x5", "x6", "x2+a*x3"},
      /* F55 */ {"x0", "x1", "x2", "x5", "x6", "x3+b*x4"},
      /* F56 */ {"x0", "x1", "x2", "x4", "x6", "x3+x5"},
      /* F57 */ {"x0", "x1", "x2", "x3", "x4", "x5", "x6"},
  };
  // ideal, sub, generator, colon target.
  struct StepSpec {
    int ideal, sub;
    const char* gen;
    int colon;
  };
  static const std::vector<StepSpec> kSteps = {
      {2, 1, "x0", 9},          {3, 1, "x2", 10},
      {4, 2, "x4", 17},         {5, 2, "x1", 19},
      {6, 3, "x3", 18},         {7, 2, "x6", 28},
      {8, 6, "x0", 9},          {9, 6, "x0+x1+x4+x5+x6", 31},
      {10, 4, "x5", 30},        {11, 5, "x2", 20},
      {12, 4, "x3", 21},        {13, 5, "x4", 17},
      {14, 4, "x2", 10},        {15, 7, "x2", 27},
      {16, 5, "x5", 33},        {17, 11, "x3+b*x4+x5+b*x6", 47},
      {18, 11, "x3+b*x4+x5+A*x6", 48},
      {19, 12, "x6", 49},       {20, 13, "x5", 56},
      {21, 13, "x2+a*x3+a*x5+x6", 50},
      {22, 14, "x6", 47},       {23, 11, "x6", 37},
      {24, 8, "x6", 48},        {25, 16, "x6", 28},
      {26, 11, "x5", 33},       {27, 10, "x6", 41},
      {28, 16, "x2+a*x3+x4+x6", 42},
      {29, 26, "x3+b*x4+b*x6", 47},
      {30, 22, "x1+x3+x5", 51}, {31, 24, "x4+B*x5", 52},
      {32, 19, "x5", 52},       {33, 23, "x3+b*x4+x5", 57},
      {34, 26, "x4", 29},       {35, 24, "x4", 53},
      {36, 26, "x3", 38},       {37, 26, "x3+A*x4+A*x6", 55},
      {38, 26, "x3+b*x4+A*x6", 48},
      {39, 20, "x3", 41},       {40, 23, "x3+b*x4", 33},
      {41, 20, "x2+a*x3+x6", 50},
      {42, 25, "x3+b*x4", 54},  {43, 20, "x6", 41},
      {44, 26, "x6", 37},       {45, 23, "x4", 33},
      {46, 23, "x3+b*x4+x5", 57},
      {47, 34, "x3+A*x6", 57},  {48, 36, "x4+x6", 57},
      {49, 39, "x2+x6", 50},    {50, 32, "x1", 32},
      {51, 32, "x2", 32},       {52, 35, "x1+x5", 51},
      {53, 31, "x1", 51},       {54, 41, "x6", 41},
      {55, 42, "x2", 50},       {56, 45, "x3+x5", 57},
      {57, 50, "x2", 50},
  };

  auto id_of = [](int k) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "F%02d", k);
    return std::string(buf);
  };

  Filtration F;
  F.nvars = nv;
  for (std::size_t k = 0; k < kIdeals.size(); ++k) {
    FiltrationIdeal fi;
    fi.id = id_of(int(k) + 1);
    for (const char* s : kIdeals[k])
      fi.gens.push_back(
          Polynomial::parse(substitute_tokens(s, a, b), nv, kOrd));
    F.ideals.push_back(std::move(fi));
  }
  for (const auto& st : kSteps)
    F.steps.push_back({id_of(st.ideal), id_of(st.sub), id_of(st.colon),
                       Polynomial::parse(substitute_tokens(st.gen, a, b), nv,
                                         kOrd)});
  return F;
}

}  // namespace linea
