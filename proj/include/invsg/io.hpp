// JSON file formats: isg-1 (Cayley table), isg-gen-1 (generating partial
// bijections) and grpd-1 (groupoid). Writers are byte-deterministic: keys
// sorted, one line, trailing newline.

#ifndef INVSG_IO_HPP_
#define INVSG_IO_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "invsg/groupoid.hpp"
#include "invsg/pbij.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

std::string write_isg(FiniteInverseSemigroup const& s);
//! Throws ParseError on malformed JSON, or the validation error of the table.
FiniteInverseSemigroup read_isg(std::string_view text);

struct GeneratorFile {
  std::size_t                   degree = 0;
  std::vector<PartialBijection> generators;
};
std::string   write_isg_gen(GeneratorFile const& g);
GeneratorFile read_isg_gen(std::string_view text);

//! Accepts either isg-1 or isg-gen-1 (closed under the default bound).
FiniteInverseSemigroup read_semigroup(std::string_view text);

std::string    write_grpd(FiniteGroupoid const& g);
FiniteGroupoid read_grpd(std::string_view text);

//! Sorted classes of labels, classes ordered by least element.
std::string congruence_to_json(FiniteInverseSemigroup const&                     s,
                               std::vector<std::vector<std::size_t>> const& classes);

}  // namespace invsg

#endif  // INVSG_IO_HPP_
