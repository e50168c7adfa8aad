#pragma once

#include "loq/awm.hpp"
#include "loq/config.hpp"
#include "loq/corpus.hpp"
#include "loq/emit.hpp"
#include "loq/error.hpp"
#include "loq/features.hpp"
#include "loq/match.hpp"
#include "loq/prosody.hpp"
#include "loq/simulation.hpp"
#include "loq/stats.hpp"
#include "loq/token.hpp"
#include "loq/tones.hpp"
