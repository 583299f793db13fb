#include "gregcycle/period28.hpp"

#include <algorithm>
#include <numeric>

namespace gregcycle {

PeriodId period_id_from_int(int id) {
  switch (id) {
    case 1: return PeriodId::S1;
    case 29: return PeriodId::S29;
    case 30: return PeriodId::S30;
    case 31: return PeriodId::S31;
    default: throw std::domain_error("period id must be 1, 29, 30 or 31, got " + std::to_string(id));
  }
}

PeriodId period_for_day(int day) {
  if (day < 1 || day > 31) throw std::domain_error("day of month out of range 1..31");
  return day <= 28 ? PeriodId::S1 : period_id_from_int(day);
}

PeriodSequence extract_period(PeriodId id) {
  const MultiplicitySequence m = multiplicity_sequence(to_int(id), weekdays::Sunday);
  PeriodSequence s{id, {}};
  std::copy_n(m.counts.begin(), kPeriod, s.entries.begin());
  return s;
}

PieceEncoding::PieceEncoding(std::vector<Segment> segments) : segments_(std::move(segments)) {
  using K = EncodingError::Kind;
  if (segments_.empty()) throw EncodingError(K::Syntax, 0, "encoding has no pieces");
  long long sum = 0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    if (s.skip < 0 || s.skip >= kPeriod) {
      throw EncodingError(K::SkipRange, i,
                          "piece " + std::to_string(i + 1) + ": skip " + std::to_string(s.skip) +
                              " outside 0..27");
    }
    if (s.length < 1) {
      throw EncodingError(K::EmptyPiece, i, "piece " + std::to_string(i + 1) + " has length 0");
    }
    sum += s.length;
  }
  if (sum != kCycleYears) {
    throw EncodingError(K::SumMismatch, 0,
                        "piece lengths sum to " + std::to_string(sum) + ", expected 400");
  }
}

std::vector<int> PieceEncoding::start_indices() const {
  std::vector<int> starts;
  starts.reserve(segments_.size());
  int end = 0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const int start = i == 0 ? segments_[i].skip : (end + segments_[i].skip) % kPeriod;
    starts.push_back(start);
    end = (start + segments_[i].length - 1) % kPeriod;
  }
  return starts;
}

int PieceEncoding::end_index() const {
  const std::vector<int> starts = start_indices();
  return (starts.back() + segments_.back().length - 1) % kPeriod;
}

std::string serialize_encoding(const PieceEncoding& enc) {
  std::string out;
  for (const Segment& s : enc.segments()) {
    out += '(';
    out += std::to_string(s.skip);
    out += ')';
    out += std::to_string(s.length);
  }
  return out;
}

YearCounts decode(const PeriodSequence& seq, const PieceEncoding& enc) {
  YearCounts out{};
  std::size_t pos = 0;
  const std::vector<int> starts = enc.start_indices();
  for (std::size_t i = 0; i < starts.size(); ++i) {
    for (int k = 0; k < enc.segments()[i].length; ++k) out[pos++] = seq.at(starts[i] + k);
  }
  return out;
}

PieceEncoding encode(const PeriodSequence& seq, std::span<const int> target) {
  using K = EncodingError::Kind;
  if (target.size() != static_cast<std::size_t>(kCycleYears)) {
    throw EncodingError(K::Unencodable, 0,
                        "target has " + std::to_string(target.size()) + " entries, expected 400");
  }
  for (std::size_t t = 0; t < target.size(); ++t) {
    if (std::find(seq.entries.begin(), seq.entries.end(), target[t]) == seq.entries.end()) {
      throw EncodingError(K::Unencodable, t,
                          "value " + std::to_string(target[t]) + " at position " + std::to_string(t) +
                              " does not occur in S" + std::to_string(to_int(seq.id)));
    }
  }

  const auto run_length = [&](int start, std::size_t from) {
    std::size_t n = 0;
    while (from + n < target.size() && seq.at(start + static_cast<int>(n)) == target[from + n]) ++n;
    return n;
  };

  std::vector<Segment> segments;
  std::size_t t = 0;
  int end = -1;
  while (t < target.size()) {
    int best_skip = 0;
    std::size_t best_len = 0;
    for (int step = 0; step < kPeriod; ++step) {
      const int start = end < 0 ? step : (end + step) % kPeriod;
      const std::size_t n = run_length(start, t);
      if (n > best_len) {
        best_len = n;
        best_skip = step;
      }
    }
    const int start = end < 0 ? best_skip : (end + best_skip) % kPeriod;
    segments.push_back({best_skip, static_cast<int>(best_len)});
    end = (start + static_cast<int>(best_len) - 1) % kPeriod;
    t += best_len;
  }
  return PieceEncoding(std::move(segments));
}

}  // namespace gregcycle
