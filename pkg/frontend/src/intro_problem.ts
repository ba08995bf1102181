/** The demo problem preloaded into the setup form: an international
 * contact form whose fields constrain each other (phone prefix fixes the
 * country, the country fixes the zip length, a Copenhagen district pins
 * the zip to 2300). */

import type { ProblemJson } from "./state.js";

export const INTRO_PROBLEM: ProblemJson = {
  alphabet: [
    "0", "1", "2", "3", "4", "5", "6", "7", "8", "9",
    "+", " ", "C", "D", "G", "S",
    "a", "e", "g", "h", "k", "m", "n", "o", "p", "r", "y",
  ],
  eol: true,
  variables: ["phone", "country", "zip", "district"],
  constraints: [
    'match(phone, "(+45|+49)[0123456789]*(()|$)")',
    'match(country, "(Denmark|Germany)(()|$)")',
    'match(zip, "[0123456789]*(()|$)")',
    'match(district, "(()|Copenhagen S)(()|$)")',
    'match(phone, "+45[0123456789]*(()|$)") <-> match(country, "Denmark(()|$)")',
    'match(phone, "+49[0123456789]*(()|$)") <-> match(country, "Germany(()|$)")',
    'match(country, "Denmark(()|$)") -> match(zip, "[0123456789][0123456789][0123456789][0123456789](()|$)")',
    'match(country, "Germany(()|$)") -> match(zip, "[0123456789][0123456789][0123456789][0123456789][0123456789](()|$)")',
    'match(zip, "2300(()|$)") && match(country, "Denmark(()|$)") <-> match(district, "Copenhagen S(()|$)")',
  ],
};
