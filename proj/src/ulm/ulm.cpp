#include "abelp/ulm/ulm.hpp"

#include <algorithm>

#include "abelp/error.hpp"

namespace abelp {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

std::uint32_t nat(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_unsigned()) {
    bad(std::string("expected a natural number at \"") + key + "\"");
  }
  const auto v = j.at(key).get<std::uint64_t>();
  if (v > 0xffffffffu) bad(std::string("\"") + key + "\" is too large");
  return static_cast<std::uint32_t>(v);
}

void check_blocks(const Ordinal& lambda, const std::vector<Ordinal>& xis) {
  for (std::size_t k = 0; k < xis.size(); ++k) {
    if (!xis[k].is_limit()) bad("block index " + xis[k].to_string() + " is not a limit ordinal");
    if (!(xis[k] < lambda)) bad("block index " + xis[k].to_string() + " is not below lambda = " + lambda.to_string());
    if (k > 0 && !(xis[k - 1] < xis[k])) bad("block indices must increase strictly");
  }
}

Tail tail_from_json(const nlohmann::json& j) {
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "all_zero")) return Tail::zero();
  if (j.is_object() && j.contains("constant")) return Tail::constant(cardinal_from_json(j.at("constant")));
  bad("tail must be \"all_zero\" or {\"constant\": cardinal}");
}

nlohmann::json tail_to_json(const Tail& t) {
  if (t.is_zero()) return "all_zero";
  return {{"constant", cardinal_to_json(t.value)}};
}

Cardinal block_rank(const BasicGroupSpec& b) { return b.rank(); }

}  // namespace

std::string Ordinal::to_string() const {
  if (q == 0) return std::to_string(r);
  std::string s = q == 1 ? "w" : "w*" + std::to_string(q);
  if (r > 0) s += "+" + std::to_string(r);
  return s;
}

std::strong_ordering ord_cmp(const Ordinal& x, const Ordinal& y) noexcept { return x <=> y; }

Ordinal ord_add(const Ordinal& x, const Ordinal& y) noexcept {
  if (y.q > 0) return {x.q + y.q, y.r};
  return {x.q, x.r + y.r};
}

std::string Cardinal::to_string() const {
  return kind == Kind::finite ? std::to_string(value) : "aleph_" + std::to_string(value);
}

Cardinal cardinal_sum(std::span<const Cardinal> head, const Tail& tail) {
  Cardinal sup = Cardinal::finite(0);
  std::uint64_t total = 0;
  for (const auto& c : head) {
    sup = std::max(sup, c);
    if (!c.is_infinite()) total += c.value;
  }
  const bool infinitely_many = !tail.is_zero();
  if (infinitely_many) sup = std::max(sup, tail.value);
  if (!infinitely_many && !sup.is_infinite()) return Cardinal::finite(total);
  return std::max(Cardinal::aleph(0), sup);
}

Cardinal UlmBlock::at(std::uint64_t n) const {
  if (n < head.size()) return head[n];
  return tail.is_zero() ? Cardinal::finite(0) : tail.value;
}

Cardinal UlmBlock::sum_from(std::uint64_t from) const {
  const std::size_t start = static_cast<std::size_t>(std::min<std::uint64_t>(from, head.size()));
  return cardinal_sum(std::span<const Cardinal>(head).subspan(start), tail);
}

void UlmSequence::validate() const {
  std::vector<Ordinal> xis;
  for (const auto& b : blocks) xis.push_back(b.xi);
  check_blocks(lambda, xis);
  for (const auto& b : blocks) {
    if (b.xi.q < lambda.q) continue;
    // Final short block: only u_{xi+n} with n < lambda.r may be nonzero.
    if (!b.tail.is_zero()) bad("block " + b.xi.to_string() + " has a nonzero tail beyond lambda");
    for (std::size_t n = lambda.r; n < b.head.size(); ++n) {
      if (!b.head[n].is_zero()) bad("u_" + Ordinal{b.xi.q, static_cast<std::uint32_t>(n)}.to_string() + " lies beyond lambda");
    }
  }
}

UlmSequence UlmSequence::canonical() const {
  UlmSequence out{lambda, {}};
  for (auto b : blocks) {
    if (b.tail.is_zero()) {
      b.tail = Tail::zero();
      while (!b.head.empty() && b.head.back().is_zero()) b.head.pop_back();
      if (b.head.empty()) continue;
    }
    out.blocks.push_back(std::move(b));
  }
  return out;
}

Cardinal UlmSequence::at(const Ordinal& kappa) const {
  if (!(kappa < lambda)) return Cardinal::finite(0);
  for (const auto& b : blocks) {
    if (b.xi.q == kappa.q) return b.at(kappa.r);
  }
  return Cardinal::finite(0);
}

UlmSequence UlmSequence::from_group(const GroupSpec& g) {
  UlmBlock b{Ordinal{}, {}, Tail::zero()};
  for (std::uint32_t k = 0; k < g.exponent(); ++k) b.head.push_back(Cardinal::finite(ulm_invariant(g, k)));
  return UlmSequence{Ordinal::finite(g.exponent()), {std::move(b)}};
}

UlmSequence UlmSequence::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("blocks") || !j.at("blocks").is_array()) {
    bad("an Ulm sequence needs \"lambda\" and a \"blocks\" array");
  }
  UlmSequence u;
  u.lambda = ordinal_from_json(j.at("lambda"));
  for (const auto& bj : j.at("blocks")) {
    if (!bj.is_object() || !bj.contains("xi")) bad("every block needs \"xi\"");
    UlmBlock b;
    b.xi = ordinal_from_json(bj.at("xi"));
    if (bj.contains("head")) {
      if (!bj.at("head").is_array()) bad("\"head\" must be an array");
      for (const auto& c : bj.at("head")) b.head.push_back(cardinal_from_json(c));
    }
    b.tail = tail_from_json(bj.value("tail", nlohmann::json()));
    u.blocks.push_back(std::move(b));
  }
  u.validate();
  return u;
}

nlohmann::json UlmSequence::to_json() const {
  nlohmann::json bs = nlohmann::json::array();
  for (const auto& b : blocks) {
    nlohmann::json head = nlohmann::json::array();
    for (const auto& c : b.head) head.push_back(cardinal_to_json(c));
    bs.push_back({{"xi", ordinal_to_json(b.xi)}, {"head", head}, {"tail", tail_to_json(b.tail)}});
  }
  return {{"lambda", ordinal_to_json(lambda)}, {"blocks", bs}};
}

ClaimReport check_ulm_criterion(const UlmSequence& u) {
  u.validate();
  ReportBuilder rb("prop-3.2", "lambda = " + u.lambda.to_string(),
                   "sum_{rho >= kappa+w} u_rho <= sum_{n<w} u_{kappa+n} whenever kappa + w < lambda");
  auto block_at = [&](std::uint32_t q) -> const UlmBlock* {
    for (const auto& b : u.blocks) {
      if (b.xi.q == q) return &b;
    }
    return nullptr;
  };
  std::uint32_t limits = 0;
  // kappa = w*q + r satisfies kappa + w < lambda iff w*(q+1) < lambda.
  for (std::uint32_t q = 0; Ordinal::omega(q + 1) < u.lambda; ++q) {
    ++limits;
    std::vector<Cardinal> later;
    for (const auto& b : u.blocks) {
      if (b.xi.q > q) later.push_back(b.sum_from(0));
    }
    const Cardinal upper = cardinal_sum(later);
    const UlmBlock* b = block_at(q);
    // The lower sum is constant once r passes the head.
    const std::size_t last_r = b ? b->head.size() : 0;
    for (std::size_t r = 0; r <= last_r; ++r) {
      const Cardinal lower = b ? b->sum_from(r) : Cardinal::finite(0);
      const Ordinal kappa{q, static_cast<std::uint32_t>(r)};
      const bool ok = upper <= lower;
      rb.check(ok, [&] {
        return nlohmann::json{{"kappa", ordinal_to_json(kappa)}, {"upper_sum", cardinal_to_json(upper)},
                              {"lower_sum", cardinal_to_json(lower)}};
      });
      if (r == 0) {
        rb.add_evidence({{"xi", ordinal_to_json(kappa)}, {"upper_sum", cardinal_to_json(upper)},
                         {"lower_sum", cardinal_to_json(lower)}, {"holds", ok}});
      }
    }
  }
  if (limits == 0) {
    rb.add_note("no kappa with kappa + w < lambda; the criterion holds vacuously");
    rb.set_bound("vacuous");
  } else {
    rb.set_bound("every kappa below w*" + std::to_string(limits));
  }
  return rb.finish();
}

Cardinal BasicGroupSpec::rank() const {
  std::vector<Cardinal> ms;
  for (const auto& s : summands) ms.push_back(s.second);
  return cardinal_sum(ms, tail ? Tail::constant(*tail) : Tail::zero());
}

void BasicGroupSpec::validate() const {
  std::uint32_t prev = 0;
  for (const auto& [n, m] : summands) {
    if (n <= prev) bad("summand exponents must be positive and strictly increasing");
    if (m.is_zero()) bad("summand multiplicities must be nonzero");
    prev = n;
  }
  if (tail) {
    if (tail->is_zero()) bad("an unbounded tail needs a nonzero multiplicity");
    if (tail_from <= prev) bad("the tail must start after the listed summands");
  }
}

void BasicSequence::validate() const {
  std::vector<Ordinal> xis;
  for (const auto& b : blocks) xis.push_back(b.first);
  check_blocks(lambda, xis);
  for (const auto& b : blocks) b.second.validate();
}

BasicSequence BasicSequence::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("blocks") || !j.at("blocks").is_array()) {
    bad("a basic sequence needs \"lambda\" and a \"blocks\" array");
  }
  BasicSequence s;
  s.lambda = ordinal_from_json(j.at("lambda"));
  for (const auto& bj : j.at("blocks")) {
    if (!bj.is_object() || !bj.contains("xi")) bad("every block needs \"xi\"");
    BasicGroupSpec b;
    if (bj.contains("summands")) {
      if (!bj.at("summands").is_array()) bad("\"summands\" must be an array");
      for (const auto& sj : bj.at("summands")) {
        if (!sj.is_object() || !sj.contains("m")) bad("every summand needs \"n\" and \"m\"");
        b.summands.emplace_back(nat(sj, "n"), cardinal_from_json(sj.at("m")));
      }
    }
    if (bj.contains("tail") && !bj.at("tail").is_null()) {
      const auto& tj = bj.at("tail");
      if (!tj.is_object() || !tj.contains("m")) bad("a tail needs \"from\" and \"m\"");
      b.tail = cardinal_from_json(tj.at("m"));
      b.tail_from = nat(tj, "from");
    }
    s.blocks.emplace_back(ordinal_from_json(bj.at("xi")), std::move(b));
  }
  s.validate();
  return s;
}

nlohmann::json BasicSequence::to_json() const {
  nlohmann::json bs = nlohmann::json::array();
  for (const auto& [xi, b] : blocks) {
    nlohmann::json sums = nlohmann::json::array();
    for (const auto& [n, m] : b.summands) sums.push_back({{"n", n}, {"m", cardinal_to_json(m)}});
    nlohmann::json tail;
    if (b.tail) tail = {{"from", b.tail_from}, {"m", cardinal_to_json(*b.tail)}};
    bs.push_back({{"xi", ordinal_to_json(xi)}, {"summands", sums}, {"tail", tail}});
  }
  return {{"lambda", ordinal_to_json(lambda)}, {"blocks", bs}};
}

ClaimReport check_basic_sequence_admissible(const BasicSequence& seq) {
  seq.validate();
  ReportBuilder rb("def-5-admissible", "lambda = " + seq.lambda.to_string(),
                   "rank(B^(xi)) >= sum of rank(B^(rho)) over the later rho, for every xi");
  for (std::size_t k = 0; k < seq.blocks.size(); ++k) {
    std::vector<Cardinal> later;
    for (std::size_t l = k + 1; l < seq.blocks.size(); ++l) later.push_back(block_rank(seq.blocks[l].second));
    const Cardinal own = block_rank(seq.blocks[k].second);
    const Cardinal rest = cardinal_sum(later);
    rb.check(rest <= own, [&] {
      return nlohmann::json{{"xi", ordinal_to_json(seq.blocks[k].first)}, {"rank", cardinal_to_json(own)},
                            {"later_ranks", cardinal_to_json(rest)}};
    });
    rb.add_evidence({{"xi", ordinal_to_json(seq.blocks[k].first)}, {"rank", cardinal_to_json(own)}});
  }
  rb.set_bound(std::to_string(seq.blocks.size()) + " blocks");
  ClaimReport rep = rb.finish();
  if (rep.refuted()) return rep;

  for (std::uint32_t q = 0; Ordinal::omega(q) < seq.lambda; ++q) {
    const Ordinal xi = Ordinal::omega(q);
    const bool needs_unbounded = !(seq.lambda < Ordinal::omega(q + 1));
    const BasicGroupSpec* b = nullptr;
    for (const auto& blk : seq.blocks) {
      if (blk.first == xi) b = &blk.second;
    }
    const bool bounded = b == nullptr || b->bounded();
    if (needs_unbounded && bounded) {
      throw Error(ErrorKind::ShapeViolation, "B^(" + xi.to_string() + ") must be unbounded since " + xi.to_string() +
                                                 " + w <= lambda");
    }
    if (!needs_unbounded) {
      if (!bounded) {
        throw Error(ErrorKind::ShapeViolation, "B^(" + xi.to_string() + ") must be bounded below lambda");
      }
      if (b && !b->summands.empty() && b->summands.back().first > seq.lambda.r) {
        throw Error(ErrorKind::ShapeViolation, "B^(" + xi.to_string() + ") has exponent beyond lambda");
      }
    }
  }
  return rep;
}

UlmSequence basic_seq_to_ulm(const BasicSequence& seq) {
  if (!check_basic_sequence_admissible(seq).verified()) {
    throw Error(ErrorKind::NotAdmissible, "basic sequence is not admissible");
  }
  UlmSequence u{seq.lambda, {}};
  for (const auto& [xi, b] : seq.blocks) {
    UlmBlock blk{xi, {}, Tail::zero()};
    const std::uint32_t len = b.tail ? b.tail_from - 1 : (b.summands.empty() ? 0 : b.summands.back().first);
    blk.head.assign(len, Cardinal::finite(0));
    for (const auto& [n, m] : b.summands) blk.head[n - 1] = m;
    if (b.tail) blk.tail = Tail::constant(*b.tail);
    u.blocks.push_back(std::move(blk));
  }
  return u;
}

BasicSequence ulm_to_basic_seq(const UlmSequence& u) {
  if (!check_ulm_criterion(u).verified()) throw Error(ErrorKind::NotAdmissible, "Ulm sequence fails the sum criterion");
  const UlmSequence c = u.canonical();
  BasicSequence seq{c.lambda, {}};
  for (const auto& blk : c.blocks) {
    BasicGroupSpec b;
    for (std::size_t k = 0; k < blk.head.size(); ++k) {
      if (!blk.head[k].is_zero()) b.summands.emplace_back(static_cast<std::uint32_t>(k + 1), blk.head[k]);
    }
    if (!blk.tail.is_zero()) {
      b.tail = blk.tail.value;
      b.tail_from = static_cast<std::uint32_t>(blk.head.size() + 1);
    }
    seq.blocks.emplace_back(blk.xi, std::move(b));
  }
  return seq;
}

ClaimReport check_derived_ulm(const BasicSequence& seq) {
  ClaimReport rep = check_ulm_criterion(basic_seq_to_ulm(seq));
  rep.claim_id = "prop-5.4";
  rep.statement = "u_{xi+k} = rank(B^(xi)_k) satisfies the sum criterion for an admissible basic sequence";
  return rep;
}

bool descriptor_leq(const SymbolicIdealDescriptor& d1, const SymbolicIdealDescriptor& d2, DescriptorRule rule) {
  if (d1.context != d2.context) {
    throw Error(ErrorKind::IncomparableContext, "descriptors from \"" + d1.context + "\" and \"" + d2.context + "\"");
  }
  const bool h_le = d1.n <= d2.n && d2.kappa <= d1.kappa;
  const bool h_ge = d2.n <= d1.n && d1.kappa <= d2.kappa;
  const bool mu_le = d1.mu <= d2.mu;
  return mu_le && (rule == DescriptorRule::verbatim ? h_ge : h_le);
}

nlohmann::json ordinal_to_json(const Ordinal& x) { return {{"q", x.q}, {"r", x.r}}; }

Ordinal ordinal_from_json(const nlohmann::json& j) { return Ordinal{nat(j, "q"), nat(j, "r")}; }

nlohmann::json cardinal_to_json(const Cardinal& c) {
  return c.is_infinite() ? nlohmann::json{{"aleph", c.value}} : nlohmann::json{{"finite", c.value}};
}

Cardinal cardinal_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return Cardinal::finite(j.get<std::uint64_t>());
  if (j.is_object() && j.size() == 1) {
    if (j.contains("finite") && j.at("finite").is_number_unsigned()) return Cardinal::finite(j.at("finite").get<std::uint64_t>());
    if (j.contains("aleph") && j.at("aleph").is_number_unsigned()) return Cardinal::aleph(j.at("aleph").get<std::uint64_t>());
  }
  bad("a cardinal is {\"finite\": n}, {\"aleph\": k} or a natural number");
}

}  // namespace abelp
