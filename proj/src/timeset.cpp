#include "tgames/timeset.hpp"

#include <algorithm>
#include <sstream>

namespace tgames {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

TimeSet TimeSet::interval(Time lo, Time hi) {
  return TimeSet(Intervals{{Interval{std::move(lo), std::move(hi)}}});
}

TimeSet TimeSet::intervals(std::vector<Interval> items) {
  return TimeSet(Intervals{std::move(items)});
}

TimeSet TimeSet::periodic(Time offset, Time period, std::vector<Time> residues) {
  return TimeSet(Periodic{std::move(offset), std::move(period), std::move(residues)});
}

bool TimeSet::contains(const Time& t) const {
  return std::visit(
      overloaded{
          [](const Always&) { return true; },
          [](const Never&) { return false; },
          [&](const Intervals& s) {
            // sorted and disjoint: first interval ending at or after t decides
            auto it = std::lower_bound(s.items.begin(), s.items.end(), t,
                                       [](const Interval& iv, const Time& x) { return iv.hi < x; });
            return it != s.items.end() && it->lo <= t;
          },
          [&](const Periodic& s) {
            if (t < s.offset || s.period <= 0) return false;
            const Time phase = (t - s.offset) % s.period;
            return std::find(s.residues.begin(), s.residues.end(), phase) != s.residues.end();
          },
          [&](const Threshold& s) {
            return s.op == Comparison::AtMost ? t <= s.bound : t >= s.bound;
          },
      },
      rep_);
}

std::vector<std::string> TimeSet::violations() const {
  std::vector<std::string> out;
  std::visit(overloaded{
                 [](const Always&) {},
                 [](const Never&) {},
                 [&](const Intervals& s) {
                   if (s.items.empty()) out.push_back("interval list is empty");
                   for (std::size_t i = 0; i < s.items.size(); ++i) {
                     const auto& iv = s.items[i];
                     if (iv.lo < 0 || iv.hi < 0) out.push_back("negative interval bound");
                     if (iv.lo > iv.hi)
                       out.push_back("interval [" + iv.lo.str() + "," + iv.hi.str() + "] is empty");
                     if (i > 0 && s.items[i - 1].hi >= iv.lo)
                       out.push_back("intervals are not sorted and disjoint at index " +
                                     std::to_string(i));
                   }
                 },
                 [&](const Periodic& s) {
                   if (s.offset < 0) out.push_back("negative periodic offset");
                   if (s.period <= 0) out.push_back("period must be positive");
                   if (s.residues.empty()) out.push_back("residue set is empty");
                   std::vector<Time> seen;
                   for (const auto& r : s.residues) {
                     if (r < 0 || (s.period > 0 && r >= s.period))
                       out.push_back("residue " + r.str() + " outside [0," + s.period.str() + ")");
                     if (std::find(seen.begin(), seen.end(), r) != seen.end())
                       out.push_back("duplicate residue " + r.str());
                     seen.push_back(r);
                   }
                 },
                 [&](const Threshold& s) {
                   if (s.bound < 0) out.push_back("negative threshold bound");
                 },
             },
             rep_);
  return out;
}

std::string TimeSet::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Always&) { os << "always"; },
                 [&](const Never&) { os << "never"; },
                 [&](const Intervals& s) {
                   os << "intervals";
                   for (const auto& iv : s.items) os << " [" << iv.lo << "," << iv.hi << "]";
                 },
                 [&](const Periodic& s) {
                   os << "periodic(offset " << s.offset << ", period " << s.period << ", residues {";
                   for (std::size_t i = 0; i < s.residues.size(); ++i)
                     os << (i ? "," : "") << s.residues[i];
                   os << "})";
                 },
                 [&](const Threshold& s) {
                   os << (s.op == Comparison::AtMost ? "x <= " : "x >= ") << s.bound;
                 },
             },
             rep_);
  return os.str();
}

}  // namespace tgames
