#pragma once

#include "heckoid/dehn.hpp"
#include "heckoid/farey.hpp"
#include "heckoid/hecke.hpp"
#include "heckoid/normal_form.hpp"
#include "heckoid/riley.hpp"
#include "heckoid/slope.hpp"
#include "heckoid/version.hpp"
#include "heckoid/word.hpp"
