#include "iterwb/type.hpp"

#include <algorithm>
#include <stdexcept>

namespace iterwb {

Type Type::arrow(Type domain, Type codomain) {
  Type t;
  t.arrow_ = std::make_shared<const Arrow>(
      Arrow{std::move(domain), std::move(codomain)});
  return t;
}

Type Type::function(const std::vector<Type>& params) {
  Type t = word();
  for (auto it = params.rbegin(); it != params.rend(); ++it) t = arrow(*it, t);
  return t;
}

const Type& Type::domain() const {
  if (!arrow_) throw std::logic_error("W has no domain");
  return arrow_->domain;
}

const Type& Type::codomain() const {
  if (!arrow_) throw std::logic_error("W has no codomain");
  return arrow_->codomain;
}

std::vector<Type> Type::params() const {
  std::vector<Type> out;
  for (const Type* t = this; t->is_arrow(); t = &t->codomain()) {
    out.push_back(t->domain());
  }
  return out;
}

std::size_t Type::level() const {
  std::size_t deepest = 0;
  std::vector<Type> ps = params();
  if (ps.empty()) return 0;
  for (const Type& p : ps) deepest = std::max(deepest, p.level());
  return deepest + 1;
}

std::string Type::str() const {
  if (is_word()) return "W";
  std::string left = domain().str();
  if (domain().is_arrow()) left = "(" + left + ")";
  return left + "->" + codomain().str();
}

bool operator==(const Type& x, const Type& y) {
  if (x.arrow_ == y.arrow_) return true;
  if (!x.arrow_ || !y.arrow_) return false;
  return x.arrow_->domain == y.arrow_->domain &&
         x.arrow_->codomain == y.arrow_->codomain;
}

}  // namespace iterwb
