"""Writes synthetic_headlines.csv: 100 clickbait-styled and 100 plain headlines.

Every title is synthetic and generated from the templates below.
"""

import csv
import random
from pathlib import Path

rng = random.Random(42)

subjects = ["Dog", "Chef", "Teacher", "Grandma", "Toddler", "Cat", "Pilot", "Farmer", "Nurse", "Teenager",
            "Neighbor", "Dad", "Mom", "Barista", "Stranger", "Golfer", "Plumber", "Singer", "Runner", "Baker"]
things = ["Hacks", "Secrets", "Photos", "Tricks", "Mistakes", "Foods", "Habits", "Gadgets", "Places", "Signs",
          "Recipes", "Tips", "Moments", "Reasons", "Facts"]
groups = ["Parent", "Student", "Traveler", "Gamer", "Homeowner", "Cook", "Introvert", "Millennial", "Dog Owner",
          "Runner"]
verbs = ["Wash", "Cook", "Store", "Clean", "Charge", "Fold", "Freeze", "Microwave", "Water", "Paint"]
objects = ["Phone", "Jeans", "Chicken", "Rice", "Laptop", "Towels", "Bread", "Plants", "Car", "Coffee Maker"]

clickbait_templates = [
    "You Won't Believe What This {s} Did Next!",
    "{n} {t} Every {g} Should Know",
    "This Is The Best {o} You Will Ever See",
    "Why You Should Never {v} Your {o} Again",
    "{n} {t} That Will Make You Say Wow",
    "What This {s} Found Will Shock You",
    "Can You Guess What Happened To This {s}?",
    "{n} Most Hilarious {t} Of The Year",
    "You Need To See What This {s} Did With A {o}",
    "Only A True {g} Will Understand These {n} {t}",
]

agencies = ["Senate", "City council", "Central bank", "Health ministry", "Supreme Court", "School board",
            "Parliament", "Transport agency", "Trade commission", "Port authority"]
actions = ["approves", "rejects", "delays", "reviews", "debates", "extends", "revises", "announces", "publishes",
           "suspends"]
topics = ["budget plan", "tariff rules", "housing bill", "water project", "rail contract", "climate report",
          "tax reform", "pension changes", "fishing quotas", "vaccine program"]
places = ["Ohio", "Kenya", "Norway", "Chile", "Quebec", "Bavaria", "Kerala", "Tasmania", "Oslo", "Lisbon",
          "Manila", "Ghana", "Peru", "Texas", "Wales"]
firms = ["Automaker", "Steel producer", "Airline", "Chipmaker", "Retailer", "Insurer", "Drug maker", "Utility",
         "Shipbuilder", "Telecom firm"]
results = ["reports higher quarterly profit", "cuts annual forecast", "opens new plant", "names new chief executive",
           "settles patent dispute", "recalls vehicles", "raises dividend", "expands in", "sells stake in unit",
           "posts revenue decline"]

plain_templates = [
    "{a} {act} {tp} in {p}",
    "{f} {r} amid slower demand in {p}",
    "Officials in {p} {act} {tp} after public hearing",
    "{f} {r} as costs rise in {p}",
    "Floods close roads across northern {p} on Tuesday",
    "{a} in {p} {act} revised {tp}",
    "Election officials in {p} certify regional results",
    "{f} based in {p} {r}",
    "Researchers in {p} publish study on soil erosion",
    "{a} {act} {tp} for fiscal year in {p}",
]


def fill(template):
    return template.format(
        s=rng.choice(subjects), t=rng.choice(things), g=rng.choice(groups), v=rng.choice(verbs),
        o=rng.choice(objects), n=rng.choice([5, 7, 9, 10, 12, 15, 17, 21, 23, 31]),
        a=rng.choice(agencies), act=rng.choice(actions), tp=rng.choice(topics), p=rng.choice(places),
        f=rng.choice(firms), r=rng.choice(results))


def tokens(title):
    return {w.strip("!?,.'").lower() for w in title.split()}


def generate(templates, count, taken):
    out = []
    while len(out) < count:
        title = fill(templates[len(out) % len(templates)])
        words = tokens(title)
        if title in taken or any(len(words & tokens(o)) / len(words | tokens(o)) > 0.8 for o in taken):
            continue
        taken.add(title)
        out.append(title)
    return out


taken = set()
bait = generate(clickbait_templates, 100, taken)
plain = generate(plain_templates, 100, taken)
rows = [(t, 1) for t in bait] + [(t, 0) for t in plain]
rng.shuffle(rows)

path = Path(__file__).with_name("synthetic_headlines.csv")
with path.open("w", newline="", encoding="utf-8") as fh:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["id", "title", "label"])
    for i, (title, label) in enumerate(rows, 1):
        w.writerow([f"syn{i:03d}", title, label])
