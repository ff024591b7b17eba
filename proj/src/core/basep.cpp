#include "basep.hpp"

#include "error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fpt {

namespace {

// Scan windows beyond this are refused rather than silently walked.
constexpr std::uint64_t kMaxWindow = 100'000'000;

void require_base(std::uint64_t p) {
  if (p < 2) throw Error(ErrorKind::Domain, "base must be at least 2");
}

void require_unit_interval(const Rational& alpha, bool allow_zero) {
  if (alpha > 1 || alpha < 0 || (!allow_zero && alpha == 0))
    throw Error(ErrorKind::Domain, to_string(alpha) + (allow_zero ? " is not in [0,1]" : " is not in (0,1]"));
}

// Zero is the constant digit 0; keeps carry scans uniform.
DigitStream stream_or_zero(const Rational& alpha, std::uint64_t p) {
  if (alpha == 0) {
    DigitStream zero;
    zero.base = p;
    zero.period = {0};
    zero.value = 0;
    return zero;
  }
  return digits(alpha, p);
}

struct Window {
  std::uint64_t length;
};

Window scan_window(const std::vector<DigitStream>& streams) {
  std::uint64_t pre = 0;
  Integer period = 1;
  for (const auto& s : streams) {
    pre = std::max<std::uint64_t>(pre, s.preperiod.size());
    Integer len = static_cast<unsigned long>(s.period.size());
    mpz_lcm(period.get_mpz_t(), period.get_mpz_t(), len.get_mpz_t());
  }
  if (period > kMaxWindow || pre + period.get_ui() > kMaxWindow)
    throw Error(ErrorKind::BudgetExceeded, "digit scan window exceeds " + std::to_string(kMaxWindow));
  return {pre + period.get_ui()};
}

std::vector<DigitStream> streams_of(const RationalVector& alphas, std::uint64_t p) {
  std::vector<DigitStream> out;
  out.reserve(alphas.size());
  for (const auto& a : alphas) {
    require_unit_interval(a, true);
    out.push_back(stream_or_zero(a, p));
  }
  return out;
}

// First k in 1..limit whose digit sum exceeds p - 1, or 0 when none.
std::uint64_t first_carry(const std::vector<DigitStream>& streams, std::uint64_t p,
                          std::uint64_t limit) {
  for (std::uint64_t k = 1; k <= limit; ++k) {
    Integer total = 0;
    for (const auto& s : streams) total += static_cast<unsigned long>(s.at(k));
    if (total > p - 1) return k;
  }
  return 0;
}

}  // namespace

std::uint64_t DigitStream::at(std::uint64_t k) const {
  if (k == 0) throw Error(ErrorKind::Domain, "digit positions start at 1");
  if (k <= preperiod.size()) return preperiod[k - 1];
  return period[(k - 1 - preperiod.size()) % period.size()];
}

DigitStream digits(const Rational& alpha, std::uint64_t p) {
  require_base(p);
  require_unit_interval(alpha, false);
  // alpha = r / b with r in [1, b]; each step emits d = (p r - 1) div b and
  // keeps r' = p r - d b, again in [1, b]. Equal states give equal tails.
  const Integer b = alpha.get_den();
  Integer r = alpha.get_num();
  std::map<Integer, std::size_t> seen;
  std::vector<std::uint64_t> out;
  while (true) {
    auto [it, inserted] = seen.emplace(r, out.size());
    if (!inserted) {
      DigitStream s;
      s.base = p;
      s.preperiod.assign(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(it->second));
      s.period.assign(out.begin() + static_cast<std::ptrdiff_t>(it->second), out.end());
      s.value = alpha;
      return s;
    }
    if (out.size() >= kMaxWindow)
      throw Error(ErrorKind::BudgetExceeded, "expansion of " + to_string(alpha) + " is too long");
    Integer pr = r * static_cast<unsigned long>(p);
    Integer d = (pr - 1) / b;
    r = pr - d * b;
    out.push_back(d.get_ui());
  }
}

Rational stream_value(const DigitStream& stream) {
  const Integer p = static_cast<unsigned long>(stream.base);
  Rational value = 0;
  Integer scale = 1;
  for (auto d : stream.preperiod) {
    scale *= p;
    value += make_rational(Integer(static_cast<unsigned long>(d)), scale);
  }
  Integer block = 0;
  for (auto d : stream.period) block = block * p + static_cast<unsigned long>(d);
  const Integer cycle = ipow(p, stream.period.size());
  value += make_rational(block, (cycle - 1) * scale);
  return value;
}

std::uint64_t digit_at(const Rational& alpha, std::uint64_t p, std::uint64_t k) {
  require_base(p);
  require_unit_interval(alpha, true);
  if (k == 0) throw Error(ErrorKind::Domain, "digit positions start at 1");
  if (alpha == 0) return 0;
  const Integer pk = ipow(static_cast<unsigned long>(p), k);
  const Integer hi = ceil(alpha * pk) - 1;
  const Integer lo = ceil(alpha * Rational(pk / static_cast<unsigned long>(p))) - 1;
  Integer d = hi - lo * static_cast<unsigned long>(p);
  return d.get_ui();
}

Rational truncation(const Rational& alpha, std::uint64_t p, std::optional<std::uint64_t> e) {
  require_base(p);
  require_unit_interval(alpha, true);
  if (!e) return alpha;
  if (*e == 0 || alpha == 0) return 0;
  const Integer pe = ipow(static_cast<unsigned long>(p), *e);
  return make_rational(ceil(alpha * pe) - 1, pe);
}

RationalVector truncation(const RationalVector& alphas, std::uint64_t p,
                          std::optional<std::uint64_t> e) {
  RationalVector out;
  out.reserve(alphas.size());
  for (const auto& a : alphas) out.push_back(truncation(a, p, e));
  return out;
}

bool adds_without_carrying(const RationalVector& alphas, std::uint64_t p) {
  require_base(p);
  const auto streams = streams_of(alphas, p);
  return first_carry(streams, p, scan_window(streams).length) == 0;
}

bool adds_without_carrying_upto(const RationalVector& alphas, std::uint64_t p, std::uint64_t e) {
  require_base(p);
  const auto streams = streams_of(alphas, p);
  // Past the window the digit sums repeat, so scanning further adds nothing.
  return first_carry(streams, p, std::min(e, scan_window(streams).length)) == 0;
}

CarryHorizon carry_horizon(const RationalVector& block, std::uint64_t p) {
  require_base(p);
  if (block.empty()) throw Error(ErrorKind::EmptyBlock, "carry horizon of an empty block");
  const auto streams = streams_of(block, p);
  const std::uint64_t k = first_carry(streams, p, scan_window(streams).length);
  if (k == 0) return {};
  return {k - 1};
}

bool multinomial_nonzero_mod_p(const Integer& total, const std::vector<Integer>& parts,
                               std::uint64_t p) {
  require_base(p);
  Integer check = 0;
  for (const auto& part : parts) {
    if (part < 0) throw Error(ErrorKind::Domain, "multinomial parts must be nonnegative");
    check += part;
  }
  if (check != total) throw Error(ErrorKind::Domain, "multinomial parts do not sum to the total");
  // Lucas: nonzero iff the parts add without carrying in base p.
  std::vector<Integer> rest = parts;
  bool more = true;
  while (more) {
    more = false;
    Integer digit_sum = 0;
    for (auto& x : rest) {
      const unsigned long d = mpz_fdiv_q_ui(x.get_mpz_t(), x.get_mpz_t(), p);
      digit_sum += d;
      if (x != 0) more = true;
    }
    if (digit_sum > p - 1) return false;
  }
  return true;
}

bool in_P_rho_0(const Blocks& blocks, std::uint64_t p) {
  require_base(p);
  for (const auto& block : blocks) {
    if (sum(block) <= 1)
      throw Error(ErrorKind::Domain, "first-digit test needs blocks with coordinate sum > 1");
  }
  for (const auto& block : blocks) {
    Integer first = 0;
    for (const auto& a : block) first += static_cast<unsigned long>(digit_at(a, p, 1));
    if (first < p) return false;
  }
  return true;
}

bool in_P_rho_inf(const Blocks& blocks, std::uint64_t p) {
  return std::all_of(blocks.begin(), blocks.end(),
                     [p](const RationalVector& b) { return adds_without_carrying(b, p); });
}

}  // namespace fpt
