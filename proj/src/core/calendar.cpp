#include "celltrace/core/calendar.hpp"

#include "celltrace/core/error.hpp"

namespace celltrace {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string_view to_string(DayOfWeek d) noexcept {
  static constexpr std::array<std::string_view, 7> names{"Mon", "Tue", "Wed", "Thu",
                                                         "Fri", "Sat", "Sun"};
  return names[static_cast<std::size_t>(d)];
}

SlotCalendar::SlotCalendar(DayOfWeek anchor_dow, int anchor_hour)
    : anchor_dow_(anchor_dow), anchor_hour_(anchor_hour) {
  if (anchor_hour < 0 || anchor_hour > 23)
    throw Error(ErrorCode::InvalidArgument, "anchor hour must be in [0, 23]");
}

SlotCalendar SlotCalendar::from_unix_hour(std::int64_t unix_hour,
                                          int utc_offset_hours) {
  const std::int64_t local = unix_hour + utc_offset_hours;
  const std::int64_t day = (local >= 0) ? local / 24 : -((-local + 23) / 24);
  // 1970-01-01 was a Thursday (index 3 with Monday = 0).
  const auto dow = static_cast<DayOfWeek>(floor_mod(day + 3, 7));
  return SlotCalendar(dow, static_cast<int>(floor_mod(local, 24)));
}

int SlotCalendar::hour_of_week(std::int64_t slot) const noexcept {
  const std::int64_t base = static_cast<std::int64_t>(anchor_dow_) * 24 + anchor_hour_;
  return static_cast<int>(floor_mod(base + slot, 168));
}

SlotTime SlotCalendar::at(std::int64_t slot) const noexcept {
  const int how = hour_of_week(slot);
  return {static_cast<DayOfWeek>(how / 24), how % 24};
}

}  // namespace celltrace
