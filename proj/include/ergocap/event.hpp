#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ergocap {

// An event over a state space of n <= 31 points; bit i corresponds to state i.
using Event = std::uint32_t;

inline Event full_event(int n) { return (Event{1} << n) - 1; }

inline bool event_contains(Event a, int state) { return (a >> state) & 1u; }

inline int event_size(Event a) { return std::popcount(a); }

inline bool event_subset(Event a, Event b) { return (a & ~b) == 0; }

// Sorted member list, for external formats.
std::vector<int> event_to_indices(Event a);

Event event_from_indices(const std::vector<int>& idx, int n);

}  // namespace ergocap
