#include <map>
#include <mutex>
#include <stdexcept>

#include "hypermod/etaforms.hpp"

namespace hypermod {

namespace {

EtaQuotientTerm term(long c, std::vector<EtaFactor> factors) {
  return EtaQuotientTerm{BigRational(c), std::move(factors)};
}

EtaCombination combo(int level, int weight, std::vector<EtaQuotientTerm> terms) {
  EtaCombination e;
  e.terms = std::move(terms);
  e.declared_level = level;
  e.declared_weight = weight;
  return e;
}

FormInfo with_eta(std::string id, std::string label, int level, int weight, long character,
                  EtaCombination eta, std::string description) {
  return FormInfo{std::move(id), std::move(label), level, weight, character, std::move(eta),
                  std::move(description)};
}

FormInfo level_only(std::string id, std::string label, int level) {
  return FormInfo{std::move(id), std::move(label), level, 4, 1, std::nullopt,
                  "weight-4 newform of level " + std::to_string(level) + " (no eta expression)"};
}

std::vector<FormInfo> make_catalogue() {
  std::vector<FormInfo> forms;
  forms.push_back(with_eta("8.4-prototype", "8.4.1.a", 8, 4, 1,
                           combo(8, 4, {term(1, {{2, 4}, {4, 4}})}), "eta2^4 eta4^4"));
  forms.push_back(with_eta("36.4", "36.4.1.a", 36, 4, 1,
                           combo(36, 4,
                                 {term(1, {{6, 14}, {2, -3}, {18, -3}}),
                                  term(-3, {{2, 3}, {6, 2}, {18, 3}})}),
                           "eta6^14/(eta2^3 eta18^3) - 3 eta2^3 eta6^2 eta18^3"));
  forms.push_back(with_eta("16.4", "16.4.1.a", 16, 4, 1,
                           combo(16, 4, {term(1, {{4, 16}, {2, -4}, {8, -4}})}),
                           "eta4^16/(eta2^4 eta8^4)"));
  forms.push_back(with_eta("27.4", "27.4.1.a", 27, 4, 1,
                           combo(27, 4,
                                 {term(1, {{1, 3}, {3, 4}, {9, 1}}),
                                  term(-27, {{3, 1}, {9, 4}, {27, 3}})}),
                           "eta1^3 eta3^4 eta9 - 27 eta3 eta9^4 eta27^3"));
  forms.push_back(with_eta("9.4-cm", "9.4.1.a", 9, 4, 1, combo(9, 4, {term(1, {{3, 8}})}),
                           "eta3^8"));
  forms.push_back(with_eta("32.4", "32.4.1.a", 32, 4, 1,
                           combo(32, 4, {term(1, {{4, 10}, {8, -2}}), term(-8, {{8, 10}, {4, -2}})}),
                           "eta4^10/eta8^2 - 8 eta8^10/eta4^2"));
  forms.push_back(with_eta("144.4", "", 144, 4, 1,
                           combo(144, 4,
                                 {term(1, {{12, 32}, {6, -12}, {24, -12}}),
                                  term(16, {{6, 4}, {24, 4}})}),
                           "eta12^32/(eta6^12 eta24^12) + 16 eta6^4 eta24^4"));
  forms.push_back(with_eta("25.4", "25.4.1.b", 25, 4, 1,
                           combo(25, 4,
                                 {term(1, {{5, 10}, {1, -1}, {25, -1}}),
                                  term(5, {{1, 2}, {5, 4}, {25, 2}})}),
                           "eta5^10/(eta1 eta25) + 5 eta1^2 eta5^4 eta25^2"));
  forms.push_back(level_only("72.4", "72.4.1.b", 72));
  forms.push_back(level_only("108.4", "108.4.1.a", 108));
  forms.push_back(level_only("216.4", "", 216));
  forms.push_back(level_only("128.4", "", 128));
  forms.push_back(level_only("200.4", "", 200));
  forms.push_back(level_only("864.4", "", 864));
  forms.push_back(with_eta("f1", "", 16, 3, -4, combo(16, 3, {term(1, {{4, 6}})}), "eta4^6"));
  forms.push_back(with_eta("f2", "", 8, 3, -8,
                           combo(8, 3, {term(1, {{1, 2}, {2, 1}, {4, 1}, {8, 2}})}),
                           "eta1^2 eta2 eta4 eta8^2"));
  forms.push_back(with_eta("f3", "", 12, 3, -3, combo(12, 3, {term(1, {{2, 3}, {6, 3}})}),
                           "eta2^3 eta6^3"));
  forms.push_back(with_eta("g", "", 8, 6, 1,
                           combo(8, 6, {term(1, {{2, 12}}), term(32, {{2, 4}, {8, 8}})}),
                           "eta2^12 + 32 eta2^4 eta8^8"));
  return forms;
}

struct ExpansionCache {
  std::mutex mu;
  std::map<std::string, QExpansion> entries;
};

ExpansionCache& expansion_cache() {
  static ExpansionCache cache;
  return cache;
}

}  // namespace

const std::vector<FormInfo>& builtin_forms() {
  static const std::vector<FormInfo> forms = make_catalogue();
  return forms;
}

std::optional<FormInfo> lookup_form(const std::string& id) {
  for (const auto& f : builtin_forms()) {
    if (f.id == id || (!f.label.empty() && f.label == id)) return f;
  }
  return std::nullopt;
}

const FormInfo& find_form(const std::string& id) {
  for (const auto& f : builtin_forms()) {
    if (f.id == id || (!f.label.empty() && f.label == id)) return f;
  }
  throw std::invalid_argument("unknown form id '" + id + "'");
}

QExpansion cached_expansion(const std::string& form_id, size_t n_max) {
  const FormInfo& info = find_form(form_id);
  if (!info.eta) throw std::invalid_argument("form '" + form_id + "' has no eta expression");
  auto& cache = expansion_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.entries.find(info.id);
    if (it != cache.entries.end() && it->second.length() >= n_max) {
      return it->second.truncated(n_max);
    }
  }
  QExpansion e = combo_expand(*info.eta, n_max);
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& slot = cache.entries[info.id];
  if (slot.length() < e.length()) slot = e;
  return e;
}

}  // namespace hypermod
