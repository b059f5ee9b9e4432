#pragma once

#include "quip/angle.hpp"
#include "quip/association.hpp"
#include "quip/config.hpp"
#include "quip/engine.hpp"
#include "quip/errors.hpp"
#include "quip/hyphenation.hpp"
#include "quip/keywords.hpp"
#include "quip/phonetics.hpp"
#include "quip/punchline.hpp"
#include "quip/record.hpp"
#include "quip/response.hpp"
#include "quip/text.hpp"
#include "quip/version.hpp"
#include "quip/wordplay.hpp"
