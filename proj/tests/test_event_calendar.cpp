#include <doctest.h>

#include <algorithm>
#include <vector>

#include "caresim/event_calendar.hpp"
#include "caresim/rng.hpp"

using namespace caresim;

TEST_CASE("events come out in time order") {
  EventCalendar cal;
  std::vector<double> fired;
  for (double t : {3.0, 1.0, 2.0})
    cal.schedule(t, [&fired, t] { fired.push_back(t); });
  while (auto e = cal.advance()) e->action();
  CHECK(fired == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(cal.now() == 3.0);
}

TEST_CASE("simultaneous events fire in scheduling order") {
  EventCalendar cal;
  std::vector<char> fired;
  cal.schedule(5.0, [&] { fired.push_back('A'); });
  cal.schedule(5.0, [&] { fired.push_back('B'); });
  while (auto e = cal.advance()) e->action();
  CHECK(fired == std::vector<char>{'A', 'B'});
}

TEST_CASE("zero-delay event fires at the current clock") {
  EventCalendar cal;
  bool inner_fired = false;
  cal.schedule(2.0, [&] {
    cal.schedule(cal.now(), [&] { inner_fired = true; });
  });
  auto first = cal.advance();
  first->action();
  CHECK_FALSE(inner_fired);
  auto second = cal.advance();
  CHECK(second->time == 2.0);
  second->action();
  CHECK(inner_fired);
}

TEST_CASE("single event at zero keeps the clock at zero") {
  EventCalendar cal;
  cal.schedule(0.0, [] {});
  CHECK(cal.advance().has_value());
  CHECK(cal.now() == 0.0);
}

TEST_CASE("scheduling into the past is a logic error") {
  EventCalendar cal;
  cal.schedule(1.0, [] {});
  cal.advance();
  CHECK_THROWS_AS(cal.schedule(0.9, [] {}), std::logic_error);
}

TEST_CASE("empty calendar signals end of run") {
  EventCalendar cal;
  CHECK_FALSE(cal.advance().has_value());
  CHECK_FALSE(cal.next_time().has_value());
}

TEST_CASE("random batch extracts exactly as a full sort of the inserted set") {
  RandomStream rng(7, 1, 0);
  EventCalendar cal;
  std::vector<std::pair<double, int>> inserted;  // (time, insertion index)
  for (int i = 0; i < 200; ++i) {
    // Coarse grid so ties actually happen.
    const double t = std::floor(rng.uniform(0.0, 10.0) * 4.0) / 4.0;
    inserted.emplace_back(t, i);
    cal.schedule(t, [] {});
  }
  std::vector<std::pair<double, int>> expected = inserted;
  std::stable_sort(expected.begin(), expected.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<std::pair<double, int>> extracted;
  while (auto e = cal.advance())
    extracted.emplace_back(e->time, static_cast<int>(e->seq));
  CHECK(extracted == expected);
}
