#include "fewweight/code.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include "fewweight/errors.hpp"
#include "fewweight/weil.hpp"

namespace fewweight {

std::string_view to_string(DefiningSetKind kind) {
  switch (kind) {
    case DefiningSetKind::D0: return "d0";
    case DefiningSetKind::D1: return "d1";
    case DefiningSetKind::FullStar: return "full";
    case DefiningSetKind::PuncturedImage: return "punctured";
    case DefiningSetKind::Custom: return "custom";
  }
  return "?";
}

std::optional<DefiningSetKind> parse_defining_set_kind(std::string_view name) {
  if (name == "d0") return DefiningSetKind::D0;
  if (name == "d1") return DefiningSetKind::D1;
  if (name == "full") return DefiningSetKind::FullStar;
  if (name == "punctured") return DefiningSetKind::PuncturedImage;
  return std::nullopt;
}

DefiningSet defining_set(const Field& field, DefiningSetKind kind, int h) {
  DefiningSet out;
  out.kind = kind;
  const std::uint32_t q = field.size();
  switch (kind) {
    case DefiningSetKind::D0:
    case DefiningSetKind::D1: {
      const int want = kind == DefiningSetKind::D1 ? 1 : 0;
      for (std::uint32_t x = 1; x < q; ++x)
        if (field.trace(Element(x)) == want) out.elements.emplace_back(x);
      break;
    }
    case DefiningSetKind::FullStar:
      for (std::uint32_t x = 1; x < q; ++x) out.elements.emplace_back(x);
      break;
    case DefiningSetKind::PuncturedImage: {
      const int m = field.degree();
      require_proper_divisor(m, h);
      if ((m / h) % 2 != 0)
        throw InvalidParameter("punctured image needs m/h even: with m/h odd, gcd(2^h+1, 2^m-1) = 1 and "
                               "x^(2^h+1) permutes GF(2^m)^*");
      out.h = h;
      std::vector<bool> hit(q, false);
      const std::uint64_t exponent = (std::uint64_t{1} << h) + 1;
      for (std::uint32_t x = 1; x < q; ++x) hit[field.pow(Element(x), exponent).bits] = true;
      for (std::uint32_t x = 1; x < q; ++x)
        if (hit[x]) out.elements.emplace_back(x);
      break;
    }
    case DefiningSetKind::Custom:
      throw InvalidParameter("custom defining sets are built with custom_defining_set()");
  }
  return out;
}

DefiningSet custom_defining_set(const Field& field, std::vector<Element> elements) {
  if (elements.empty()) throw InvalidParameter("defining set is empty");
  for (auto e : elements)
    if (e.is_zero() || e.bits >= field.size())
      throw InvalidParameter("defining set element " + std::to_string(e.bits) + " is not in GF(2^" +
                             std::to_string(field.degree()) + ")^*");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return DefiningSet{DefiningSetKind::Custom, 0, std::move(elements)};
}

LinearCode::LinearCode(Field field, int h, DefiningSet defset)
    : field_(std::move(field)), h_(h), defset_(std::move(defset)) {
  if (h != 0) require_proper_divisor(field_.degree(), h);
  if (defset_.elements.empty()) throw InvalidParameter("defining set is empty");
  const std::uint64_t exponent = h == 0 ? 1 : (std::uint64_t{1} << h) + 1;
  columns_.reserve(defset_.elements.size());
  for (auto d : defset_.elements) {
    if (d.is_zero() || d.bits >= field_.size()) throw InvalidParameter("defining set element outside GF(2^m)^*");
    columns_.push_back(field_.pow(d, exponent));
  }

  // Dimension = GF(2)-rank of the span of the columns, via an xor basis
  // indexed by leading bit.
  std::vector<std::uint32_t> basis(field_.degree(), 0);
  for (auto c : columns_) {
    std::uint32_t v = c.bits;
    for (int b = field_.degree() - 1; b >= 0 && v != 0; --b) {
      if (((v >> b) & 1) == 0) continue;
      if (basis[b] == 0) {
        basis[b] = v;
        ++k_;
        break;
      }
      v ^= basis[b];
    }
  }
}

std::vector<std::uint8_t> LinearCode::codeword(Element message) const {
  std::vector<std::uint8_t> out(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j)
    out[j] = static_cast<std::uint8_t>(field_.trace(field_.mul(message, columns_[j])));
  return out;
}

LinearCode build_code(const Field& field, int h, DefiningSet defset) { return LinearCode(field, h, std::move(defset)); }

LinearCode punctured_code(const Field& field, int h) {
  if (field.degree() <= 2) throw InvalidParameter("punctured code needs m > 2");
  return LinearCode(field, 0, defining_set(field, DefiningSetKind::PuncturedImage, h));
}

std::uint64_t codeword_weight_direct(const LinearCode& code, Element message) {
  std::uint64_t w = 0;
  for (auto c : code.columns()) w += static_cast<std::uint64_t>(code.field().trace(code.field().mul(message, c)));
  return w;
}

std::uint64_t codeword_weight_formula(const Field& field, int h, int a, Element b) {
  if (a != 0 && a != 1) throw InvalidParameter("trace class a must be 0 or 1");
  if (b.is_zero()) throw InvalidParameter("weight formula needs b != 0; the zero codeword has weight 0");
  const WeilEvaluator weil(field, h);
  auto sum = [&](Element second) {
    const WeilSumValue v = weil.closed(b, second);
    return v.is_exact() ? v.value() : weil.direct(b, second);
  };
  const std::int64_t s0 = sum(Field::zero());
  const std::int64_t s1 = sum(Field::one());
  // 4|N(a,b)| = 2^m + S_h(b,0) + (-1)^a S_h(b,1)
  const std::int64_t four_n = (std::int64_t{1} << field.degree()) + s0 + (a == 0 ? s1 : -s1);
  if (four_n % 4 != 0 || four_n < 0) throw ConsistencyFailure("|N(a,b)| is not a non-negative integer");
  return (std::uint64_t{1} << (field.degree() - 1)) - static_cast<std::uint64_t>(four_n / 4);
}

WeightCounts WeightDistribution::nonzero_message_counts() const {
  WeightCounts out = message_counts;
  if (auto it = out.find(0); it != out.end() && --it->second == 0) out.erase(it);
  return out;
}

std::size_t WeightDistribution::distinct_nonzero_weights() const {
  return static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(), [](auto& p) { return p.first != 0; }));
}

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options) {
  const Field& field = code.field();
  const int m = field.degree();
  const std::uint64_t n = code.length();
  const std::uint64_t work = std::uint64_t{field.size()} * n;
  if (work > options.budget)
    throw BudgetExceeded("enumerating 2^" + std::to_string(m) + " messages x " + std::to_string(n) +
                         " coordinates exceeds the work budget of " + std::to_string(options.budget) +
                         "; use the weight formula or theorem predictions instead");

  const std::uint32_t order = field.group_order();
  // trace(g^i) for i < 2 * order so that log x + log phi(d) needs no reduction.
  std::vector<std::uint8_t> trace_by_log(2 * std::size_t{order});
  const auto antilog = field.antilog_table();
  for (std::uint32_t i = 0; i < order; ++i) {
    const auto t = static_cast<std::uint8_t>(field.trace(Element(antilog[i])));
    trace_by_log[i] = t;
    trace_by_log[i + order] = t;
  }
  std::vector<std::uint32_t> column_logs;
  column_logs.reserve(n);
  for (auto c : code.columns()) column_logs.push_back(field.log(c));

  unsigned workers = options.workers != 0 ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, order));

  // Messages x = g^t; worker i takes a contiguous range of t.
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 1, 0));
  auto run = [&](unsigned worker) {
    const std::uint64_t begin = std::uint64_t{order} * worker / workers;
    const std::uint64_t end = std::uint64_t{order} * (worker + 1) / workers;
    auto& hist = partial[worker];
    for (std::uint64_t t = begin; t < end; ++t) {
      const std::uint8_t* row = trace_by_log.data() + t;
      std::uint64_t w = 0;
      for (auto l : column_logs) w += row[l];
      ++hist[w];
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) threads.emplace_back(run, i);
  }

  WeightDistribution dist;
  dist.m = m;
  dist.h = code.parameter_h();
  dist.kind = code.kind();
  dist.n = n;
  dist.k = code.dimension();
  dist.message_counts[0] = 1;
  for (const auto& hist : partial)
    for (std::uint64_t w = 0; w <= n; ++w)
      if (hist[w] != 0) dist.message_counts[w] += hist[w];

  // Each codeword is hit by exactly 2^{m-k} messages.
  const std::uint64_t fibre = std::uint64_t{1} << (m - dist.k);
  for (auto [w, c] : dist.message_counts) {
    if (c % fibre != 0)
      throw ConsistencyFailure("weight " + std::to_string(w) + " multiplicity not divisible by 2^(m-k)");
    dist.counts[w] = c / fibre;
  }
  for (auto [w, c] : dist.counts)
    if (w != 0) {
      dist.d_min = w;
      break;
    }
  return dist;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  auto& word = row(r)[c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  word = v ? (word | bit) : (word & ~bit);
}

std::size_t BitMatrix::row_reduce() {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t p = rank;
    while (p < rows_ && !get(p, c)) ++p;
    if (p == rows_) continue;
    if (p != rank) std::swap_ranges(row(p).begin(), row(p).end(), row(rank).begin());
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank || !get(r, c)) continue;
      auto dst = row(r);
      auto src = row(rank);
      for (std::size_t w = 0; w < stride_; ++w) dst[w] ^= src[w];
    }
    ++rank;
  }
  rows_ = rank;
  words_.resize(rank * stride_);
  return rank;
}

BitMatrix generator_matrix(const LinearCode& code) {
  const int m = code.field().degree();
  BitMatrix g(static_cast<std::size_t>(m), code.length());
  for (int i = 0; i < m; ++i) {
    const auto word = code.codeword(Element(std::uint32_t{1} << i));
    for (std::size_t j = 0; j < word.size(); ++j)
      if (word[j]) g.set(static_cast<std::size_t>(i), j, true);
  }
  if (g.row_reduce() != static_cast<std::size_t>(code.dimension()))
    throw ConsistencyFailure("generator matrix rank differs from the code dimension");
  return g;
}

void write_generator_matrix(std::ostream& os, const LinearCode& code) {
  const BitMatrix g = generator_matrix(code);
  os << code.length() << ' ' << code.dimension() << ' ' << code.field().degree() << ' ' << code.parameter_h() << ' '
     << code.field().modulus() << '\n';
  std::string line(g.cols(), '0');
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) line[c] = g.get(r, c) ? '1' : '0';
    os << line << '\n';
  }
}

}  // namespace fewweight
