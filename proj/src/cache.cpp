#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cyclorth/cyclotomic.hpp"
#include "cyclorth/numtheory.hpp"

namespace cyclorth {

namespace {

// Phi_n(1) from d = prod_{1 < e | d} Phi_e(1), solved bottom-up over the
// divisor lattice of n in machine integers. Zero for n == 1.
std::uint64_t phi_at_one(std::uint64_t n) {
  if (n == 1) return 0;
  const auto divs = divisors(n);
  std::map<std::uint64_t, std::uint64_t> value;
  for (std::uint64_t d : divs) {
    if (d == 1) continue;
    std::uint64_t proper = 1;
    for (std::uint64_t e : divs) {
      if (e >= d) break;
      if (e > 1 && d % e == 0) proper *= value[e];
    }
    value[d] = d / proper;
  }
  return value[n];
}

std::uint64_t parse_index(std::string_view text, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw std::invalid_argument("cache line " + std::to_string(line_no) + ": bad index '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::optional<std::string> validate_phi(std::uint64_t n, const IntPoly& f) {
  if (n == 0) return "index must be positive";
  if (f.degree() != totient(n)) {
    return "degree " + (f.is_zero() ? std::string("-inf") : std::to_string(*f.degree())) +
           " differs from phi(" + std::to_string(n) + ")";
  }
  if (f.lead() != 1) return "leading coefficient is not 1";
  // At X = 0 the product identity gives -1 = Phi_1(0) * prod_{d>1} Phi_d(0),
  // and inductively Phi_d(0) = 1 for every d > 1.
  const Integer at_zero = n == 1 ? Integer(-1) : Integer(1);
  if (f.coeff(0) != at_zero) return "constant term " + f.coeff(0).get_str() + " is wrong";
  const Integer at_one = f.evaluate(Integer(1));
  if (at_one != phi_at_one(n)) return "value at 1 is " + at_one.get_str();
  return std::nullopt;
}

CycloCache::CycloCache(PhiAlgorithm algorithm) : algorithm_(algorithm) {}

IntPoly CycloCache::phi(std::uint64_t n) {
  if (n == 0) throw std::domain_error("argument must be a positive integer, got 0");
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(n); it != entries_.end()) return it->second;
  }
  IntPoly value = algorithm_ == PhiAlgorithm::cascade
                      ? phi_cascade(n, [this](std::uint64_t d) { return phi(d); })
                      : cyclorth::phi(n, algorithm_);
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.emplace(n, std::move(value));
  dirty_ = dirty_ || inserted;
  return it->second;
}

IntPoly CycloCache::psi(std::uint64_t n) {
  return div_exact(IntPoly::binomial(n, -1), phi(n));
}

IntPoly CycloCache::psi_nd(std::uint64_t n, std::uint64_t d) {
  if (n == 0 || d == 0 || n % d != 0) {
    throw std::domain_error("psi_nd requires d | n, got n=" + std::to_string(n) +
                            ", d=" + std::to_string(d));
  }
  IntPoly quotient = div_exact(IntPoly::binomial(n, -1), phi(d));
  const IntPoly tiled = mul(geometric_sum(n, d), psi(d));
  if (quotient != tiled) {
    throw std::logic_error("Psi_{n,d} formulas disagree for n=" + std::to_string(n) +
                           ", d=" + std::to_string(d));
  }
  return quotient;
}

bool CycloCache::contains(std::uint64_t n) const {
  std::shared_lock lock(mutex_);
  return entries_.contains(n);
}

std::size_t CycloCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::map<std::uint64_t, IntPoly> CycloCache::snapshot() const {
  std::shared_lock lock(mutex_);
  return entries_;
}

void CycloCache::insert(std::uint64_t n, IntPoly f) {
  if (auto problem = validate_phi(n, f)) {
    throw std::invalid_argument("rejected cache entry for n=" + std::to_string(n) + ": " + *problem);
  }
  std::unique_lock lock(mutex_);
  entries_.insert_or_assign(n, std::move(f));
  dirty_ = true;
}

void CycloCache::write(std::ostream& os) const {
  std::shared_lock lock(mutex_);
  for (const auto& [n, f] : entries_) {
    os << n << ':';
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (k > 0) os << ',';
      os << f.coeffs()[k];
    }
    os << '\n';
  }
}

void CycloCache::read(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  std::map<std::uint64_t, IntPoly> parsed;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("cache line " + std::to_string(line_no) + ": missing ':'");
    }
    const std::uint64_t n = parse_index(std::string_view(line).substr(0, colon), line_no);
    std::vector<Integer> coeffs;
    std::istringstream fields(line.substr(colon + 1));
    std::string token;
    while (std::getline(fields, token, ',')) {
      Integer c;
      if (token.empty() || c.set_str(token, 10) != 0) {
        throw std::invalid_argument("cache line " + std::to_string(line_no) + ": bad coefficient '" +
                                    token + "'");
      }
      coeffs.push_back(std::move(c));
    }
    IntPoly f(std::move(coeffs));
    if (auto problem = validate_phi(n, f)) {
      throw std::invalid_argument("cache line " + std::to_string(line_no) + ": " + *problem);
    }
    parsed.insert_or_assign(n, std::move(f));
  }
  std::unique_lock lock(mutex_);
  for (auto& [n, f] : parsed) entries_.insert_or_assign(n, std::move(f));
}

void CycloCache::save(const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    write(out);
    if (!out) throw std::runtime_error("failed writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
  std::unique_lock lock(mutex_);
  dirty_ = false;
}

bool CycloCache::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return false;
  read(in);
  std::unique_lock lock(mutex_);
  dirty_ = false;
  return true;
}

bool CycloCache::dirty() const {
  std::shared_lock lock(mutex_);
  return dirty_;
}

CycloCache& default_cache() {
  static CycloCache cache;
  return cache;
}

}  // namespace cyclorth
