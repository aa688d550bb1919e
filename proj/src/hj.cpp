#include "carlson/hj.hpp"

#include <algorithm>
#include <limits>

#include "carlson/parallel.hpp"

namespace carlson {

Word LineTable::line(std::size_t j) const {
  const std::uint64_t base = letters + 1;
  std::vector<Entry> entries;
  std::uint64_t f = fixed.at(j);
  std::uint64_t s = step.at(j);
  for (Position pos = 0; f != 0 || s != 0; ++pos, f /= base, s /= base) {
    if (s % base != 0) entries.push_back({pos, kStar});
    else if (f % base != 0) entries.push_back({pos, static_cast<Symbol>(f % base - 1)});
  }
  return Word::from_entries(std::move(entries));
}

LineTable line_table(std::size_t letters, unsigned window) {
  LineTable t;
  t.letters = letters;
  t.window = window;
  table_size(letters, window);  // overflow guard
  // Odometer in base k + 2 (0 absent, 1 star, 2 + rank letter), least
  // significant digit at position 0, so lines come out in canonical order.
  const unsigned radix = static_cast<unsigned>(letters + 2);
  std::vector<unsigned> digits(window, 0);
  std::vector<std::uint64_t> weight(window, 1);
  for (unsigned i = 1; i < window; ++i) weight[i] = weight[i - 1] * (letters + 1);
  for (;;) {
    std::size_t i = 0;
    while (i < window && ++digits[i] == radix) digits[i++] = 0;
    if (i == window) break;
    std::uint64_t f = 0;
    std::uint64_t s = 0;
    for (unsigned pos = 0; pos < window; ++pos) {
      if (digits[pos] == 1) s += weight[pos];
      else if (digits[pos] >= 2) f += weight[pos] * (digits[pos] - 1);
    }
    if (s == 0) continue;
    t.fixed.push_back(f);
    t.step.push_back(s);
  }
  return t;
}

std::int64_t first_monochromatic_line(const LineTable& lines, const Color* table) {
  const std::size_t k = lines.letters;
  for (std::size_t j = 0; j < lines.size(); ++j) {
    const std::uint64_t f = lines.fixed[j];
    const std::uint64_t s = lines.step[j];
    const Color c = table[f + s];
    bool mono = true;
    for (std::size_t a = 1; a < k && mono; ++a) mono = table[f + (1 + a) * s] == c;
    if (mono) return static_cast<std::int64_t>(j);
  }
  return -1;
}

std::optional<HJWitness> hj_witness(const Coloring& f) {
  const auto lines = line_table(f.alphabet().size(), f.window());
  auto j = first_monochromatic_line(lines, f.table().data());
  if (j < 0) return std::nullopt;
  const auto& l = static_cast<std::size_t>(j);
  return HJWitness{lines.line(l), f.table()[lines.fixed[l] + lines.step[l]], f.window()};
}

std::optional<HJWitness> hj_witness_serial(const Coloring& f) {
  auto w = hj_witness(view(f), f.alphabet(), 0, f.window());
  if (w) w->window = f.window();
  return w;
}

std::optional<HJWitness> hj_witness(const ColorFunction& f, const Alphabet& alphabet, Position lo, Position hi) {
  std::optional<HJWitness> found;
  for_each_variable_word(alphabet, lo, hi, [&](const Word& p) {
    const Color c = f(instantiate(p, 0, alphabet));
    for (Symbol a = 1; a < alphabet.size(); ++a)
      if (f(instantiate(p, a, alphabet)) != c) return true;
    found = HJWitness{p, c, hi};
    return false;
  });
  return found;
}

std::uint64_t coloring_count(std::size_t letters, unsigned colors, unsigned window) {
  const auto cells = table_size(letters, window) - 1;
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < cells; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / colors)
      throw Error(Errc::Overflow, "coloring space does not fit 64 bits");
    n *= colors;
  }
  return n;
}

std::vector<Color> coloring_from_index(std::uint64_t index, std::size_t letters, unsigned colors, unsigned window) {
  std::vector<Color> table(table_size(letters, window), 0);
  for (std::size_t i = 1; i < table.size(); ++i, index /= colors) table[i] = static_cast<Color>(index % colors);
  return table;
}

namespace {

void increment(std::vector<Color>& table, unsigned colors) {
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (++table[i] < colors) return;
    table[i] = 0;
  }
}

// Least lineless coloring index in [begin, end), or `end`.
std::uint64_t first_lineless_serial(const LineTable& lines, unsigned colors, std::uint64_t begin, std::uint64_t end) {
  if (begin >= end) return end;
  auto table = coloring_from_index(begin, lines.letters, colors, lines.window);
  for (std::uint64_t i = begin; i < end; ++i, increment(table, colors))
    if (first_monochromatic_line(lines, table.data()) < 0) return i;
  return end;
}

std::uint64_t first_lineless_parallel(const LineTable& lines, unsigned colors, std::uint64_t total) {
  // Ordered chunks keep the reported index the least one regardless of the
  // worker count.
  const std::uint64_t chunk = std::uint64_t{1} << 16;
  const int workers = worker_count();
  for (std::uint64_t start = 0; start < total; start += chunk * static_cast<std::uint64_t>(workers)) {
    const std::uint64_t stop = std::min(total, start + chunk * static_cast<std::uint64_t>(workers));
    std::uint64_t best = stop;
    const auto pieces = static_cast<std::int64_t>((stop - start + chunk - 1) / chunk);
#pragma omp parallel for schedule(static, 1) reduction(min : best) num_threads(workers)
    for (std::int64_t piece = 0; piece < pieces; ++piece) {
      const std::uint64_t lo = start + static_cast<std::uint64_t>(piece) * chunk;
      const std::uint64_t hi = std::min(stop, lo + chunk);
      const auto found = first_lineless_serial(lines, colors, lo, hi);
      if (found < hi) best = std::min(best, found);
    }
    if (best < stop) return best;
  }
  return total;
}

template <typename Finder>
HJNumberResult hj_number_with(std::size_t letters, unsigned colors, unsigned n_max, Finder find) {
  if (letters == 0 || colors == 0) throw Error(Errc::InvalidArgument, "need at least one letter and one color");
  HJNumberResult result;
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto lines = line_table(letters, n);
    const auto total = coloring_count(letters, colors, n);
    const auto bad = find(lines, colors, total);
    if (bad == total) {
      result.value = n;
      return result;
    }
    result.lineless_witnesses.push_back(bad);
  }
  return result;
}

}  // namespace

HJNumberResult hj_number(std::size_t letters, unsigned colors, unsigned n_max) {
  return hj_number_with(letters, colors, n_max, first_lineless_parallel);
}

HJNumberResult hj_number_serial(std::size_t letters, unsigned colors, unsigned n_max) {
  return hj_number_with(letters, colors, n_max, [](const LineTable& lines, unsigned c, std::uint64_t total) {
    return first_lineless_serial(lines, c, 0, total);
  });
}

std::uint64_t count_lineless_serial(std::size_t letters, unsigned colors, unsigned window, std::uint64_t begin,
                                    std::uint64_t end) {
  const auto lines = line_table(letters, window);
  end = std::min(end, coloring_count(letters, colors, window));
  if (begin >= end) return 0;
  auto table = coloring_from_index(begin, letters, colors, window);
  std::uint64_t count = 0;
  for (std::uint64_t i = begin; i < end; ++i, increment(table, colors)) count += first_monochromatic_line(lines, table.data()) < 0;
  return count;
}

std::uint64_t count_lineless(std::size_t letters, unsigned colors, unsigned window, std::uint64_t begin,
                             std::uint64_t end) {
  const auto lines = line_table(letters, window);
  end = std::min(end, coloring_count(letters, colors, window));
  if (begin >= end) return 0;
  const std::uint64_t chunk = std::uint64_t{1} << 14;
  const auto pieces = static_cast<std::int64_t>((end - begin + chunk - 1) / chunk);
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : count) num_threads(worker_count())
  for (std::int64_t piece = 0; piece < pieces; ++piece) {
    const std::uint64_t lo = begin + static_cast<std::uint64_t>(piece) * chunk;
    const std::uint64_t hi = std::min(end, lo + chunk);
    auto table = coloring_from_index(lo, letters, colors, window);
    for (std::uint64_t i = lo; i < hi; ++i, increment(table, colors)) count += first_monochromatic_line(lines, table.data()) < 0;
  }
  return count;
}

}  // namespace carlson
