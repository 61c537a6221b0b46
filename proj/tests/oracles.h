// Copyright 2026 The lambdagen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent reference implementations used as test oracles. They share no
// code with the library beyond the textual term syntax.

#ifndef LAMBDAGEN_TESTS_ORACLES_H_
#define LAMBDAGEN_TESTS_ORACLES_H_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Pointer-based lambda term.
struct Lam {
  enum Kind { kVar, kAbs, kApp } kind;
  int index = 0;
  std::shared_ptr<const Lam> a, b;
};
using LamPtr = std::shared_ptr<const Lam>;

inline LamPtr Var(int i) { return std::make_shared<Lam>(Lam{Lam::kVar, i}); }
inline LamPtr Abs(LamPtr body) {
  return std::make_shared<Lam>(Lam{Lam::kAbs, 0, std::move(body)});
}
inline LamPtr App(LamPtr f, LamPtr x) {
  return std::make_shared<Lam>(Lam{Lam::kApp, 0, std::move(f), std::move(x)});
}

inline int Size(const LamPtr& t) {
  switch (t->kind) {
    case Lam::kVar: return t->index + 1;
    case Lam::kAbs: return 2 + Size(t->a);
    case Lam::kApp: return 2 + Size(t->a) + Size(t->b);
  }
  return 0;
}

inline std::string Print(const LamPtr& t) {
  switch (t->kind) {
    case Lam::kVar: return std::to_string(t->index);
    case Lam::kAbs: return "λ" + Print(t->a);
    case Lam::kApp: return "(" + Print(t->a) + " " + Print(t->b) + ")";
  }
  return "";
}

inline std::string Tromp(const LamPtr& t) {
  switch (t->kind) {
    case Lam::kVar: return std::string(t->index, '1') + "0";
    case Lam::kAbs: return "00" + Tromp(t->a);
    case Lam::kApp: return "01" + Tromp(t->a) + Tromp(t->b);
  }
  return "";
}

// Largest amount by which an index exceeds its binder depth (0 if closed).
inline int Excess(const LamPtr& t, int depth = 0) {
  switch (t->kind) {
    case Lam::kVar: return t->index > depth ? t->index - depth : 0;
    case Lam::kAbs: return Excess(t->a, depth + 1);
    case Lam::kApp: return std::max(Excess(t->a, depth), Excess(t->b, depth));
  }
  return 0;
}

// All terms of size n, built directly from the grammar: abstractions, then
// applications by ascending function size, then the bare index.
inline const std::vector<LamPtr>& AllTerms(int n) {
  static std::map<int, std::vector<LamPtr>> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<LamPtr> out;
  if (n >= 4) {
    for (const LamPtr& body : AllTerms(n - 2)) out.push_back(Abs(body));
    for (int k = 2; k <= n - 4; ++k) {
      for (const LamPtr& f : AllTerms(k)) {
        for (const LamPtr& x : AllTerms(n - 2 - k)) out.push_back(App(f, x));
      }
    }
  }
  if (n >= 2) out.push_back(Var(n - 1));
  return memo[n] = std::move(out);
}

// All tree shapes printed in the ".", "(t)", "(l r)" syntax.
inline const std::vector<std::string>& AllMotzkin(int n) {
  static std::map<int, std::vector<std::string>> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<std::string> out;
  if (n == 1) out.push_back(".");
  if (n >= 2) {
    for (const auto& c : AllMotzkin(n - 1)) out.push_back("(" + c + ")");
    for (int k = 1; k <= n - 2; ++k) {
      for (const auto& l : AllMotzkin(k)) {
        for (const auto& r : AllMotzkin(n - 1 - k)) {
          out.push_back("(" + l + " " + r + ")");
        }
      }
    }
  }
  return memo[n] = std::move(out);
}

inline const std::vector<std::string>& AllBinary(int n) {
  static std::map<int, std::vector<std::string>> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<std::string> out;
  if (n == 1) out.push_back(".");
  for (int k = 1; k <= n - 2; ++k) {
    for (const auto& l : AllBinary(k)) {
      for (const auto& r : AllBinary(n - 1 - k)) {
        out.push_back("(" + l + " " + r + ")");
      }
    }
  }
  return memo[n] = std::move(out);
}

// Textbook inference with an explicit substitution applied eagerly.
class EagerTyper {
 public:
  struct Ty {
    bool arrow = false;
    int var = 0;
    std::shared_ptr<const Ty> dom, cod;
  };
  using TyPtr = std::shared_ptr<const Ty>;

  // Canonical printed type, or nullopt if untypable.
  std::optional<std::string> Infer(const LamPtr& t) {
    subst_.clear();
    next_ = 0;
    free_.clear();
    std::vector<TyPtr> env;
    const TyPtr ty = Go(t, env);
    if (!ty) return std::nullopt;
    std::map<int, int> names;
    return Show(Resolve(ty), names, false);
  }

  // True iff the term has the given type exactly: the type unifies with the
  // term's inferred type without instantiating any of its variables.
  bool Checks(const LamPtr& t, const std::string& type) {
    subst_.clear();
    next_ = 1 << 20;
    free_.clear();
    std::size_t pos = 0;
    std::map<std::string, int> vars;
    const TyPtr given = ParseType(type, pos, vars);
    if (!given || pos != type.size()) return false;
    next_ = 0;
    std::vector<TyPtr> env;
    const TyPtr inferred = Go(t, env);
    if (!inferred || !Unify(given, inferred)) return false;
    // Every given variable must still be a distinct unbound variable.
    std::map<int, int> seen;
    for (const auto& [name, id] : vars) {
      auto v = std::make_shared<Ty>();
      v->var = id;
      const TyPtr r = Resolve(v);
      if (r->arrow || !seen.emplace(r->var, id).second) return false;
    }
    return true;
  }

 private:
  TyPtr NewVar() {
    auto v = std::make_shared<Ty>();
    v->var = next_++;
    return v;
  }
  TyPtr Resolve(const TyPtr& t) const {
    if (!t->arrow) {
      auto it = subst_.find(t->var);
      return it == subst_.end() ? t : Resolve(it->second);
    }
    auto a = std::make_shared<Ty>();
    a->arrow = true;
    a->dom = Resolve(t->dom);
    a->cod = Resolve(t->cod);
    return a;
  }
  static bool Occurs(int v, const TyPtr& t) {
    if (!t->arrow) return t->var == v;
    return Occurs(v, t->dom) || Occurs(v, t->cod);
  }
  bool Unify(TyPtr a, TyPtr b) {
    a = Resolve(a);
    b = Resolve(b);
    if (!a->arrow && !b->arrow && a->var == b->var) return true;
    if (!a->arrow) {
      if (Occurs(a->var, b)) return false;
      subst_[a->var] = b;
      return true;
    }
    if (!b->arrow) return Unify(b, a);
    return Unify(a->dom, b->dom) && Unify(a->cod, b->cod);
  }
  TyPtr Go(const LamPtr& t, std::vector<TyPtr>& env) {
    switch (t->kind) {
      case Lam::kVar: {
        const int depth = static_cast<int>(env.size());
        if (t->index <= depth) return env[depth - t->index];
        const int level = t->index - depth;
        auto it = free_.find(level);
        if (it == free_.end()) it = free_.emplace(level, NewVar()).first;
        return it->second;
      }
      case Lam::kAbs: {
        const TyPtr bound = NewVar();
        env.push_back(bound);
        const TyPtr body = Go(t->a, env);
        env.pop_back();
        if (!body) return nullptr;
        auto a = std::make_shared<Ty>();
        a->arrow = true;
        a->dom = bound;
        a->cod = body;
        return a;
      }
      case Lam::kApp: {
        const TyPtr f = Go(t->a, env);
        if (!f) return nullptr;
        const TyPtr x = Go(t->b, env);
        if (!x) return nullptr;
        const TyPtr r = NewVar();
        auto want = std::make_shared<Ty>();
        want->arrow = true;
        want->dom = x;
        want->cod = r;
        if (!Unify(f, want)) return nullptr;
        return r;
      }
    }
    return nullptr;
  }
  static std::string Name(int k) {
    std::string s(1, static_cast<char>('a' + k % 26));
    if (k >= 26) s += std::to_string(k / 26);
    return s;
  }
  static std::string Show(const TyPtr& t, std::map<int, int>& names,
                          bool parens) {
    if (!t->arrow) {
      auto it = names.find(t->var);
      if (it == names.end()) {
        it = names.emplace(t->var, static_cast<int>(names.size())).first;
      }
      return Name(it->second);
    }
    std::string dom = Show(t->dom, names, true);
    std::string s = dom + " → " + Show(t->cod, names, false);
    return parens ? "(" + s + ")" : s;
  }

  TyPtr ParseType(const std::string& s, std::size_t& pos,
                  std::map<std::string, int>& vars) {
    TyPtr dom;
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      dom = ParseType(s, pos, vars);
      if (!dom || pos >= s.size() || s[pos] != ')') return nullptr;
      ++pos;
    } else {
      std::string name;
      while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) {
        name += s[pos++];
      }
      if (name.empty()) return nullptr;
      auto it = vars.find(name);
      if (it == vars.end()) it = vars.emplace(name, next_++).first;
      auto v = std::make_shared<Ty>();
      v->var = it->second;
      dom = v;
    }
    static const std::string kArrow = " → ";
    if (s.compare(pos, kArrow.size(), kArrow) != 0) return dom;
    pos += kArrow.size();
    const TyPtr cod = ParseType(s, pos, vars);
    if (!cod) return nullptr;
    auto a = std::make_shared<Ty>();
    a->arrow = true;
    a->dom = dom;
    a->cod = cod;
    return a;
  }

  std::map<int, TyPtr> subst_;
  std::map<int, TyPtr> free_;
  int next_ = 0;
};

}  // namespace oracle

#endif  // LAMBDAGEN_TESTS_ORACLES_H_
