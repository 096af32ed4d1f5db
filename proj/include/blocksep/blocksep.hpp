#ifndef BLOCKSEP_BLOCKSEP_HPP
#define BLOCKSEP_BLOCKSEP_HPP

#include "enumerate.hpp"
#include "errors.hpp"
#include "fibonacci.hpp"
#include "integer.hpp"
#include "qseries.hpp"
#include "recurrence.hpp"
#include "symfun.hpp"
#include "transfer.hpp"

#endif  // BLOCKSEP_BLOCKSEP_HPP
