#ifndef RLZ77_HPP_
#define RLZ77_HPP_

#include "alphabet.hpp"
#include "dyn_sequence.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "factor_codec.hpp"
#include "gap_bitvector.hpp"
#include "parser.hpp"
#include "rlbwt.hpp"
#include "sample_store.hpp"
#include "spsi.hpp"

#endif /* RLZ77_HPP_ */
