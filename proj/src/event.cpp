#include "ergocap/event.hpp"

#include "ergocap/errors.hpp"

#include <string>

namespace ergocap {

std::vector<int> event_to_indices(Event a) {
    std::vector<int> out;
    for (int i = 0; a >> i; ++i)
        if (event_contains(a, i)) out.push_back(i);
    return out;
}

Event event_from_indices(const std::vector<int>& idx, int n) {
    Event a = 0;
    for (int i : idx) {
        if (i < 0 || i >= n)
            throw InputError("event index " + std::to_string(i) + " out of range [0," +
                             std::to_string(n) + ")");
        a |= Event{1} << i;
    }
    return a;
}

}  // namespace ergocap
