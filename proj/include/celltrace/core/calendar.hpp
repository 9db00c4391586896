#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace celltrace {

/// Monday is 0, Sunday is 6.
enum class DayOfWeek : std::uint8_t { Mon, Tue, Wed, Thu, Fri, Sat, Sun };

std::string_view to_string(DayOfWeek d) noexcept;

struct SlotTime {
  DayOfWeek dow = DayOfWeek::Mon;
  int hour = 0;

  friend bool operator==(const SlotTime&, const SlotTime&) = default;
};

/// Maps hourly slot indices to (day of week, hour). Slot 0 is anchored at a
/// known civil time; all other slots follow by one hour each.
class SlotCalendar {
 public:
  SlotCalendar() = default;
  SlotCalendar(DayOfWeek anchor_dow, int anchor_hour);

  /// Anchors slot 0 at `unix_hour` (hours since 1970-01-01T00:00Z) seen in a
  /// timezone `utc_offset_hours` away from UTC.
  static SlotCalendar from_unix_hour(std::int64_t unix_hour, int utc_offset_hours);

  SlotTime at(std::int64_t slot) const noexcept;
  DayOfWeek anchor_dow() const noexcept { return anchor_dow_; }
  int anchor_hour() const noexcept { return anchor_hour_; }

  /// Hour-of-week in [0, 168) for `slot`.
  int hour_of_week(std::int64_t slot) const noexcept;

 private:
  DayOfWeek anchor_dow_ = DayOfWeek::Mon;
  int anchor_hour_ = 0;
};

}  // namespace celltrace
