#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "subgrow/word.hpp"

namespace subgrow {

inline std::vector<std::string> default_generator_names(int count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 0; i < count; ++i) {
    if (i < 26)
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      names.push_back("g" + std::to_string(i));
  }
  return names;
}

// A finitely presented group: generator count plus freely reduced relators.
// Empty relators are dropped on construction.
struct FinitePresentation {
  int num_generators = 0;
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  FinitePresentation() = default;

  FinitePresentation(int gens, std::vector<Word> rels,
                     std::vector<std::string> names = {})
      : num_generators(gens), generator_names(std::move(names)) {
    if (gens < 0) throw input_error("negative generator count");
    if (generator_names.empty()) generator_names = default_generator_names(gens);
    if (static_cast<int>(generator_names.size()) != gens)
      throw input_error("generator name count does not match generator count");
    for (Word& r : rels) {
      if (r.max_generator() >= gens)
        throw input_error("relator uses generator outside the presentation");
      if (!r.empty()) relators.push_back(std::move(r));
    }
  }

  void validate_word(const Word& w) const {
    if (w.max_generator() >= num_generators)
      throw input_error("word uses generator outside the presentation");
  }

  bool is_free() const { return relators.empty(); }

  friend bool operator==(const FinitePresentation& a, const FinitePresentation& b) {
    return a.num_generators == b.num_generators && a.relators == b.relators;
  }
};

inline FinitePresentation mk_free_group(int rank) {
  if (rank < 1) throw input_error("free group rank must be at least 1");
  return FinitePresentation(rank, {});
}

// Closed case: 2g generators a1 b1 a2 b2 ... with one relator [a1,b1]...[ag,bg].
// Punctured case: free of rank 2g + punctures - 1.
inline FinitePresentation mk_surface_group(int genus, int punctures) {
  if (genus < 0 || punctures < 0) throw input_error("negative genus or puncture count");
  if (punctures > 0) {
    int rank = 2 * genus + punctures - 1;
    return FinitePresentation(rank, {});
  }
  std::vector<Letter> rel;
  for (int i = 0; i < genus; ++i) {
    int a = 2 * i, b = 2 * i + 1;
    rel.push_back({a, 1});
    rel.push_back({b, 1});
    rel.push_back({a, -1});
    rel.push_back({b, -1});
  }
  return FinitePresentation(2 * genus, {free_reduce(rel)});
}

// An automorphism given by generator images together with the images of the
// inverse map. On free groups invertibility is verified exactly; on groups
// with relators only the abelianized check runs and abelian_check_only
// records the weaker certificate.
struct GroupAutomorphism {
  std::vector<Word> images;
  std::vector<Word> inverse_images;
  bool abelian_check_only = false;

  int rank() const { return static_cast<int>(images.size()); }
};

inline Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.gen >= static_cast<int>(images.size()))
      throw input_error("substitution: word uses generator without an image");
    if (l.sign > 0)
      out.append(images[l.gen]);
    else
      out.append(images[l.gen].inverse());
  }
  return out;
}

inline Word apply_automorphism(const GroupAutomorphism& phi, const Word& w) {
  return substitute(w, phi.images);
}

inline Word apply_automorphism_inverse(const GroupAutomorphism& phi, const Word& w) {
  return substitute(w, phi.inverse_images);
}

inline GroupAutomorphism identity_automorphism(int rank) {
  GroupAutomorphism phi;
  for (int i = 0; i < rank; ++i) {
    phi.images.push_back(word_from_gen(i));
    phi.inverse_images.push_back(word_from_gen(i));
  }
  return phi;
}

namespace detail {

// rows = generators of the target indexing, cols index the domain generators:
// column j holds the exponent vector of images[j].
inline std::vector<std::vector<Int>> abelianized_map(const std::vector<Word>& images, int rank) {
  std::vector<std::vector<Int>> m(rank, std::vector<Int>(images.size(), 0));
  for (std::size_t j = 0; j < images.size(); ++j)
    for (int i = 0; i < rank; ++i) m[i][j] = images[j].exponent_sum(i);
  return m;
}

}  // namespace detail

// Builds and validates an automorphism of P. Free groups get the exact
// two-sided composition check; one-relator surface groups only the
// abelianized M * M_inv = I check plus a trust flag.
inline GroupAutomorphism make_automorphism(const FinitePresentation& P,
                                           std::vector<Word> images,
                                           std::vector<Word> inverse_images) {
  int r = P.num_generators;
  if (static_cast<int>(images.size()) != r || static_cast<int>(inverse_images.size()) != r)
    throw input_error("automorphism image count does not match generator count");
  for (const Word& w : images) P.validate_word(w);
  for (const Word& w : inverse_images) P.validate_word(w);

  GroupAutomorphism phi{std::move(images), std::move(inverse_images), false};

  if (P.is_free()) {
    for (int i = 0; i < r; ++i) {
      if (apply_automorphism(phi, phi.inverse_images[i]) != word_from_gen(i) ||
          apply_automorphism_inverse(phi, phi.images[i]) != word_from_gen(i))
        throw witness_error("automorphism images do not invert each other");
    }
    return phi;
  }

  // Relator images must abelianize to zero is not required (relators need only
  // map to consequences); for surface groups we check the induced map on H1 is
  // invertible over Z and that relator images abelianize to zero.
  for (const Word& rel : P.relators) {
    Word im = apply_automorphism(phi, rel);
    for (int i = 0; i < r; ++i)
      if (im.exponent_sum(i) != 0)
        throw witness_error("relator image does not abelianize to zero");
  }
  auto M = detail::abelianized_map(phi.images, r);
  auto N = detail::abelianized_map(phi.inverse_images, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Int s = 0;
      for (int k = 0; k < r; ++k) s += M[i][k] * N[k][j];
      if (s != (i == j ? 1 : 0))
        throw witness_error("abelianized automorphism matrices do not invert");
    }
  phi.abelian_check_only = true;
  return phi;
}

// Mapping torus presentation: G's generators plus a stable letter t with
// relators t g t^-1 phi(g)^-1 for each generator g of G.
inline FinitePresentation mk_semidirect_Z(const FinitePresentation& G,
                                          const GroupAutomorphism& phi) {
  if (phi.rank() != G.num_generators)
    throw input_error("monodromy arity does not match fiber generator count");
  int t = G.num_generators;
  std::vector<Word> rels = G.relators;
  for (int j = 0; j < G.num_generators; ++j) {
    Word r = word_from_gen(t);
    r.append(word_from_gen(j));
    r.append(word_from_gen(t, -1));
    r.append(apply_automorphism(phi, word_from_gen(j)).inverse());
    rels.push_back(std::move(r));
  }
  std::vector<std::string> names = G.generator_names;
  std::string stable = "t";
  if (std::find(names.begin(), names.end(), stable) != names.end()) {
    for (char c : std::string("suvwxyz")) {
      std::string cand(1, c);
      if (std::find(names.begin(), names.end(), cand) == names.end()) {
        stable = cand;
        break;
      }
    }
  }
  names.push_back(stable);
  return FinitePresentation(G.num_generators + 1, std::move(rels), std::move(names));
}

namespace detail {

inline Word substitute_single(const Word& w, int gen, const Word& replacement) {
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) {
      if (l.sign > 0)
        out.append(replacement);
      else
        out.append(replacement.inverse());
    } else {
      out.push(l);
    }
  }
  return out;
}

inline Word drop_generator(const Word& w, int gen) {
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) throw internal_error("drop_generator: generator still present");
    out.push({l.gen > gen ? l.gen - 1 : l.gen, l.sign});
  }
  return out;
}

}  // namespace detail

// Generator elimination only: a generator occurring exactly once in some
// relator is solved for and substituted everywhere; trivial relators are
// deleted. The result presents an isomorphic group and its generator count
// is an upper bound for the rank.
inline FinitePresentation tietze_reduce(const FinitePresentation& P) {
  int gens = P.num_generators;
  std::vector<std::string> names = P.generator_names;
  std::vector<Word> rels = P.relators;

  for (;;) {
    rels.erase(std::remove_if(rels.begin(), rels.end(),
                              [](const Word& w) { return w.empty(); }),
               rels.end());

    int found_rel = -1, found_gen = -1, found_pos = -1;
    for (std::size_t ri = 0; ri < rels.size() && found_rel < 0; ++ri) {
      std::vector<int> count(gens, 0);
      for (const Letter& l : rels[ri].letters()) ++count[l.gen];
      for (int g = 0; g < gens; ++g) {
        if (count[g] == 1) {
          found_rel = static_cast<int>(ri);
          found_gen = g;
          for (std::size_t k = 0; k < rels[ri].size(); ++k)
            if (rels[ri].letters()[k].gen == g) found_pos = static_cast<int>(k);
          break;
        }
      }
    }
    if (found_rel < 0) break;

    // R = u x^e v = 1  =>  x = (u^-1 v^-1)^e
    const Word& R = rels[found_rel];
    int e = R.letters()[found_pos].sign;
    Word u = Word::from_letters({R.letters().begin(), R.letters().begin() + found_pos});
    Word v = Word::from_letters({R.letters().begin() + found_pos + 1, R.letters().end()});
    Word solution = u.inverse() * v.inverse();
    if (e < 0) solution = solution.inverse();

    std::vector<Word> next;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      if (static_cast<int>(ri) == found_rel) continue;
      Word s = detail::substitute_single(rels[ri], found_gen, solution);
      next.push_back(detail::drop_generator(s, found_gen));
    }
    rels = std::move(next);
    names.erase(names.begin() + found_gen);
    --gens;
  }

  return FinitePresentation(gens, std::move(rels), std::move(names));
}

}  // namespace subgrow
