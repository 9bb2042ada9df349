#ifndef ELECTIONS_STATES_HPP
#define ELECTIONS_STATES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace elections {

inline constexpr std::size_t kStateCount = 51;

// Alphabetical; District of Columbia counts as a state and sorts under D.
inline constexpr std::array<std::string_view, kStateCount> kStateNames = {
    "Alabama",        "Alaska",         "Arizona",       "Arkansas",
    "California",     "Colorado",       "Connecticut",   "Delaware",
    "District of Columbia",             "Florida",       "Georgia",
    "Hawaii",         "Idaho",          "Illinois",      "Indiana",
    "Iowa",           "Kansas",         "Kentucky",      "Louisiana",
    "Maine",          "Maryland",       "Massachusetts", "Michigan",
    "Minnesota",      "Mississippi",    "Missouri",      "Montana",
    "Nebraska",       "Nevada",         "New Hampshire", "New Jersey",
    "New Mexico",     "New York",       "North Carolina", "North Dakota",
    "Ohio",           "Oklahoma",       "Oregon",        "Pennsylvania",
    "Rhode Island",   "South Carolina", "South Dakota",  "Tennessee",
    "Texas",          "Utah",           "Vermont",       "Virginia",
    "Washington",     "West Virginia",  "Wisconsin",     "Wyoming",
};

struct StateId {
  std::size_t index;

  std::string_view name() const { return kStateNames.at(index); }
  friend bool operator==(StateId, StateId) = default;
};

inline std::optional<StateId> find_state(std::string_view name) {
  for (std::size_t i = 0; i < kStateCount; ++i) {
    if (kStateNames[i] == name) return StateId{i};
  }
  return std::nullopt;
}

inline StateId state_of(std::string_view name) { return find_state(name).value(); }

}  // namespace elections

#endif
