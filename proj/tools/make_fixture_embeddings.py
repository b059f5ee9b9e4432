#!/usr/bin/env python3
"""Regenerates resources/fixture/embeddings.txt.

A small word2vec-format table. Six keywords from the reference sentences
each own an axis; their association lists below are laid out along that
axis in the given order, so most_similar(keyword, 50) returns exactly the
list. Each keyword pair also shares a private contrast axis with opposite
signs, which makes the pair the least similar one in its sentence. All other
tokens live in the remaining dimensions, clustered by group and domain.
Output is deterministic.

    python3 tools/make_fixture_embeddings.py [--out PATH] [--seed N]
"""

import argparse
import pathlib

import numpy as np

DIM = 64

# keyword -> associations, most similar first. Underscores join chunks.
NEIGHBOURHOODS = {
    "flower": """flowers blossom garden petals bloom blooms wisteria petal tulip tulips roses rose daisy
        daisies orchid primrose lily lilies florist pollen nectar bud buds stem stems vase fragrance scent
        lilac violet sunflower iris hydrangea peony hyacinth marigold lavender jasmine gardenia dahlia
        magnolia begonia geranium chrysanthemum azalea hibiscus zinnia wreath floral perennial seedling""",
    "corpse": """corpses carcass cadaver remains skeleton body bodies carcasses cadavers skull bones coffin
        casket grave graves tomb cemetery graveyard morgue autopsy mortician undertaker embalming decay
        rot stench mummy zombie ghoul funeral burial hearse mourner widow obituary shroud cremation crypt
        mausoleum headstone epitaph coroner homicide victim decomposition carrion deceased murder
        forensic embalmer exhumation""",
    "Mexican": """Mexicans Mexico Puerto_Rican Yucatan Guatemalan Salvadoran Honduran Cuban Cubans
        Puerto_Ricans Hispanics Latino Latinos Latina Dominican Colombian Venezuelan Peruvian Chilean
        Argentine Nicaraguan Panamanian Spanish taco tacos burrito burritos tequila sombrero salsa
        tortilla tortillas enchilada nachos guacamole fajitas quesadilla mariachi fiesta pinata cantina
        Tijuana Cancun Acapulco Guadalajara peso Chihuahua Sinaloa Oaxaca immigrant immigrants border""",
    "demon": """demons devil devils Satan Lucifer exorcist exorcism possessed spirit spirits ghost ghosts
        poltergeist witch witches warlock curse ritual occult seance fiend imp incubus succubus vampire
        werewolf sorcerer pentagram Ouija underworld hellfire hell Beelzebub monster monsters beast evil
        sinister haunted haunting phantom specter goblin gargoyle satanic demonic wraith banshee
        summoning possession""",
    "virus": """viruses flu influenza infection infections bacteria germ germs pathogen pathogens vaccine
        vaccines disease diseases epidemic pandemic outbreak contagion fever cough sneeze illness
        sickness symptoms immunity antibodies microbe microbes measles mumps polio herpes hepatitis
        rabies malaria smallpox chickenpox quarantine strain Ebola contagious infected bug cold plague
        virology mutation transmission infectious vaccination
        epidemiology""",
    "stupidity": """idiocy ignorance foolishness incompetence arrogance laziness cowardice dumbness stupid
        dumb idiot idiots moron morons fool fools folly absurdity insanity madness ineptitude gullibility
        naivete dullness obtuseness imbecile dimwit nitwit buffoon silliness ignorant idiotic stupidest
        dumber dumbest lunacy buffoonery nonsense blunder blunders asinine ridiculous ineptness mindless
        brainless dunce oaf clueless senseless dopey
        pointless""",
}

# Keyword pairs pushed apart along a private axis.
CONTRASTS = [("flower", "corpse"), ("Mexican", "demon"), ("virus", "stupidity")]
CONTRAST_WEIGHT = 1.0

# Similarity to the keyword falls linearly from NEAR to FAR across its list.
NEAR, FAR = 0.92, 0.55

# domain -> group -> tokens, for everything outside the neighbourhoods.
DOMAINS = {
    "nature": {
        "garden": """gardens gardener greenhouse soil seed seeds shrub hedge lawn meadow orchard fern moss ivy vine
            weeds compost fertilizer sprout leaf leaves twig branch bush""",
    },
    "death": {
        "funeral": """funerals mourners wake urn tombstone eulogy pallbearer""",
    },
    "office": {
        "pencil": """pencil pencils pen pens eraser crayon crayons marker markers notebook notepad sharpener ruler
            stapler paperclip envelope stationery chalk ink quill highlighter binder""",
    },
    "medicine": {
        "hospital": """hospital hospitals clinic clinics doctor doctors nurse nurses patient patients surgeon
            physician pharmacy medicine medication syringe ambulance diagnosis therapy""",
    },
    "academia": {
        "researchers": """researchers researcher scientists scientist study studies professor professors laboratory lab
            experiment experiments journal findings biologist chemist physicist epidemiologist""",
        "universities": """Johns_Hopkins Harvard Stanford Yale Princeton Cornell Mayo_Clinic MIT Oxford Cambridge
            university universities campus faculty""",
    },
    "fastfood": {
        "chicken": """Popeyes chicken chickens sandwich sandwiches chicken_sandwich nuggets drumstick wings biscuits
            fries burger burgers KFC McDonald's Wendy's restaurant restaurants""",
    },
    "weapons": {
        "gun": """gun guns pistol pistols rifle rifles shotgun revolver handgun firearm firearms bullet bullets
            ammo holster trigger Bubba""",
    },
    "woods": {
        "forest": """forest forests woods trees tree timber wilderness park parks ranger rangers national_forests
            logging campfire""",
    },
    "drugs": {
        "marijuana": """marijuana cannabis weed pot hemp joint joints stoner stoners bong edibles dispensary Canada""",
    },
    "shoes": {
        "sneakers": """Adidas Nike Puma Reebok sneakers sneaker shoes shoe boots sandals footwear""",
    },
    "drink": {
        "beer": """beer beers brewery breweries ale lager stout pub bar bartender keg Oktoberfest""",
        "vomit": """vomit puke poop diarrhea nausea hangover barf urine""",
        "beverages": """beverages beverage soda sodas drinks drink juice lemonade sugar cola Coca_Cola""",
    },
    "crime": {
        "theft": """theft thefts thief thieves burglary burglar burglaries robbery robber heist stolen larceny
            shoplifting crook""",
    },
    "baby": {
        "diapers": """diapers diaper baby babies stroller crib pacifier toddler infant bib nursery""",
    },
    "party": {
        "anniversary": """anniversary anniversaries jubilee birthday celebration celebrations party parties festival
            holiday""",
        "blue": """blue Blue_Man_Group Blue_Man red green purple""",
    },
    "zoo": {
        "rhinoceros": """rhinoceros rhino rhinos hippo elephant elephants giraffe zebra zoo zoos safari""",
        "insemination": """insemination fertility pregnancy sperm embryo conception breeding IVF""",
    },
    "plumbing": {
        "sewage": """sewage sewer toilet toilets plumbing wastewater plumber restroom restrooms""",
        "water": """water drinking_water bottled_water Dasani Aquafina""",
    },
    "industry": {
        "dow": """Dow_Chemical DuPont Monsanto chemicals factory""",
    },
    "art": {
        "museum": """museum museums Guggenheim gallery sculpture painting exhibit gold golden silver""",
    },
    "religion": {
        "hindu": """Hindu Hindus Sikh Sikhs deity deities god gods goddess temple Buddha""",
    },
    "retail": {
        "handbags": """handbags handbag purse purses wallet luggage""",
        "truck": """truck trucks van vans trailer driver""",
    },
    "apparel": {
        "lingerie": """lingerie bikini bikinis underwear panties bra pajamas""",
    },
    "risk": {
        "death": """death deaths risk risks danger mortality""",
    },
}


def build(seed):
    rng = np.random.default_rng(seed)

    def unit(v):
        return v / np.linalg.norm(v)

    keywords = list(NEIGHBOURHOODS)
    n_axes = len(keywords) + len(CONTRASTS)
    free = DIM - n_axes

    def free_vector():
        v = np.zeros(DIM)
        v[n_axes:] = rng.standard_normal(free)
        return unit(v)

    def axis(i):
        v = np.zeros(DIM)
        v[i] = 1.0
        return v

    rows = []
    seen = set()

    def emit(tok, v):
        if tok in seen:
            raise SystemExit(f"duplicate token {tok}")
        seen.add(tok)
        rows.append((tok, unit(v)))

    for k, kw in enumerate(keywords):
        v = axis(k)
        for c, (a, b) in enumerate(CONTRASTS):
            if kw in (a, b):
                v = v + (CONTRAST_WEIGHT if kw == a else -CONTRAST_WEIGHT) * axis(len(keywords) + c)
        emit(kw, v)
        members = NEIGHBOURHOODS[kw].split()
        if len(members) < 50:
            raise SystemExit(f"{kw}: {len(members)} associations, need at least 50")
        for r, tok in enumerate(members):
            cos = NEAR - (NEAR - FAR) * r / max(1, len(members) - 1)
            emit(tok, cos * axis(k) + np.sqrt(1 - cos * cos) * free_vector())

    for domain, groups in DOMAINS.items():
        dcenter = free_vector()
        for group, words in groups.items():
            gcenter = unit(0.75 * dcenter + 0.65 * free_vector())
            for tok in words.split():
                emit(tok, gcenter + 0.30 * free_vector())
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent
                                         / "resources" / "fixture" / "embeddings.txt"))
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    rows = build(args.seed)
    with open(args.out, "w") as f:
        f.write(f"{len(rows)} {DIM}\n")
        for tok, v in rows:
            f.write(tok + " " + " ".join(f"{x:.6f}" for x in v) + "\n")
    print(f"wrote {len(rows)} tokens to {args.out}")


if __name__ == "__main__":
    main()
