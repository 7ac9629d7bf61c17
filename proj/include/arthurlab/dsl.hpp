#pragma once

#include <string>

#include "arthurlab/arthur_param.hpp"
#include "arthurlab/half_int.hpp"
#include "arthurlab/l_param.hpp"
#include "arthurlab/labels.hpp"

namespace arthurlab {

// Text forms. Whitespace between tokens is ignored on input; printers emit
// the canonical spacing shown below and printing after parsing is stable
// byte for byte.
//
//   half       3   -5/2
//   label      tr(1,O)            name, GL-dim, self-dual type
//   parameter  Sp:10 = 2*tr(1,O).S2.S1 + tr(1,O).S3.S1
//   L-param    SO:9 = tr(1,O)[-1/2].S3 + tr(1,O)[1/2].S3 + 2*tr(1,O)[0].S1
//
// Only self-dual labels have a text form; a non-self-dual label prints with
// its partner after ';' for display and is rejected by the parsers.

std::string print_half(HalfInt h);
HalfInt parse_half(const std::string& text);

std::string print_label(const SupercuspidalLabel& rho);
SupercuspidalLabel parse_label(const std::string& text);

std::string print_parameter(const LocalArthurParameter& psi);
LocalArthurParameter parse_parameter(const std::string& text);

std::string print_l_parameter(const LocalLParameter& phi);
LocalLParameter parse_l_parameter(const std::string& text);

}  // namespace arthurlab
