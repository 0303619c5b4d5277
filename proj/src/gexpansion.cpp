#include "kgroth/gexpansion.hpp"

#include <json.hpp>

#include <sstream>

namespace kgroth {

IntegerSequence canonical_sequence(IntegerSequence s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

void GExpansion::add(const IntegerSequence& key, const Integer& coeff) {
  if (coeff == 0) return;
  IntegerSequence k = canonical_sequence(key);
  auto it = entries_.find(k);
  if (it == entries_.end()) {
    entries_.emplace(std::move(k), coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) entries_.erase(it);
}

Integer GExpansion::coeff(const IntegerSequence& key) const {
  auto it = entries_.find(canonical_sequence(key));
  return it == entries_.end() ? Integer(0) : it->second;
}

bool GExpansion::all_partition_keys() const {
  for (const auto& [key, c] : entries_) {
    if (!is_partition(key)) return false;
  }
  return true;
}

GExpansion& GExpansion::operator+=(const GExpansion& o) {
  for (const auto& [key, c] : o.entries_) add(key, c);
  return *this;
}

GExpansion GExpansion::scaled(const Integer& c) const {
  GExpansion out;
  if (c == 0) return out;
  for (const auto& [key, v] : entries_) out.entries_.emplace(key, v * c);
  return out;
}

namespace {

std::string key_args(const IntegerSequence& key) {
  std::ostringstream os;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) os << ',';
    os << key[i];
  }
  return os.str();
}

}  // namespace

std::string GExpansion::to_text() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : entries_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (key.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << "G(" << key_args(key) << ')';
  }
  return os.str();
}

std::string GExpansion::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, c] : entries_) {
    nlohmann::json row;
    row["index"] = key;
    row["coeff"] = static_cast<long>(c.get_si());
    if (!c.fits_slong_p()) row["coeff"] = c.get_str();
    arr.push_back(std::move(row));
  }
  return arr.dump();
}

std::string GExpansion::to_latex() const {
  if (entries_.empty()) return "0";
  // Group terms by total degree of the key.
  std::map<long, std::vector<std::pair<IntegerSequence, Integer>>> groups;
  for (const auto& [key, c] : entries_) {
    groups[sequence_weight(key)].push_back({key, c});
  }
  auto term = [](const IntegerSequence& key, const Integer& coeff) {
    std::ostringstream os;
    if (key.empty()) {
      os << coeff.get_str();
      return os.str();
    }
    if (coeff == -1) {
      os << '-';
    } else if (coeff != 1) {
      os << coeff.get_str();
    }
    os << "G_{" << key_args(key) << '}';
    return os.str();
  };
  std::ostringstream os;
  bool first_group = true;
  for (const auto& [deg, terms] : groups) {
    bool all_neg = true;
    bool all_pos = true;
    for (const auto& [key, c] : terms) (c < 0 ? all_pos : all_neg) = false;
    if (all_neg) {
      os << '-';
    } else if (!first_group) {
      os << '+';
    }
    bool factored = (all_neg || all_pos) && terms.size() > 1;
    if (factored) os << "\\left(";
    bool first = true;
    for (const auto& [key, c] : terms) {
      Integer shown = (all_neg && (factored || terms.size() == 1)) ? Integer(-c) : c;
      if (!first) {
        os << (shown < 0 ? "" : "+");
      }
      os << term(key, shown);
      first = false;
    }
    if (factored) os << "\\right)";
    first_group = false;
  }
  return os.str();
}

}  // namespace kgroth
