#ifndef CHOICEREV_CHOICEREV_HPP
#define CHOICEREV_CHOICEREV_HPP

#include "choicerev/logic.hpp"
#include "choicerev/descriptor.hpp"
#include "choicerev/operators.hpp"
#include "choicerev/outcome_model.hpp"
#include "choicerev/believability.hpp"
#include "choicerev/synthesis.hpp"
#include "choicerev/io.hpp"

#endif  // CHOICEREV_CHOICEREV_HPP
