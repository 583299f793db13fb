#pragma once

// Period-28 sequences and the piece encoding "(skip)length(skip)length..."
// that rebuilds a 400-year multiplicity sequence from one of them.
//
// Decoding keeps a cursor into the 28-entry clock. The first skip is the
// absolute start index. Every later skip is the number of steps forward from
// the index of the last value emitted by the previous piece. A piece of
// length L then emits L consecutive entries, wrapping around the clock.

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gregcycle/cycle_stats.hpp"

namespace gregcycle {

inline constexpr int kPeriod = 28;

enum class PeriodId { S1 = 1, S29 = 29, S30 = 30, S31 = 31 };

inline constexpr std::array<PeriodId, 4> kAllPeriods = {PeriodId::S1, PeriodId::S29, PeriodId::S30,
                                                        PeriodId::S31};

// Throws std::domain_error unless id is one of 1, 29, 30, 31.
PeriodId period_id_from_int(int id);
constexpr int to_int(PeriodId id) noexcept { return static_cast<int>(id); }

// Period sequence used for day-of-month d: 1 for d <= 28, else d itself.
PeriodId period_for_day(int day);

struct PeriodSequence {
  PeriodId id = PeriodId::S1;
  std::array<int, kPeriod> entries{};

  int at(int index) const noexcept { return entries[static_cast<std::size_t>(index % kPeriod)]; }
};

// First 28 entries of M(id, Sunday).
PeriodSequence extract_period(PeriodId id);

struct Segment {
  int skip = 0;
  int length = 1;

  friend bool operator==(const Segment&, const Segment&) = default;
};

class EncodingError : public std::runtime_error {
 public:
  enum class Kind { Syntax, SumMismatch, SkipRange, EmptyPiece, Unencodable };

  EncodingError(Kind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  // Character offset for syntax errors, sequence index for Unencodable,
  // segment index for SkipRange/EmptyPiece, 0 otherwise.
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

class PieceEncoding {
 public:
  // Validates: at least one segment, every skip in 0..27, every length >= 1,
  // lengths summing to 400. Throws EncodingError otherwise.
  explicit PieceEncoding(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  std::size_t size() const noexcept { return segments_.size(); }

  // Clock index of the first value of each piece.
  std::vector<int> start_indices() const;
  // Clock index of the last value emitted.
  int end_index() const;

  friend bool operator==(const PieceEncoding&, const PieceEncoding&) = default;

 private:
  std::vector<Segment> segments_;
};

enum class ParseMode {
  Strict,
  // Also accepts a parenthesised final length directly after a skip at the
  // end of input, e.g. "...(17)(100)".
  Lenient,
};

PieceEncoding parse_encoding(std::string_view text, ParseMode mode = ParseMode::Lenient);

std::string serialize_encoding(const PieceEncoding& enc);

YearCounts decode(const PeriodSequence& seq, const PieceEncoding& enc);

// Greedy segmentation: each piece starts at the clock index giving the longest
// match against the remaining target, ties going to the smallest skip.
// Throws EncodingError(Unencodable) at the first value absent from seq.
PieceEncoding encode(const PeriodSequence& seq, std::span<const int> target);

}  // namespace gregcycle
