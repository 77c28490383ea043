#!/usr/bin/env python3
"""Regenerate the shipped lexicon files under src/formality3/resources/lexicons.

The lists are curated by hand here; rerun after editing to keep the files
normalized (sorted, deduplicated, provenance headers intact).
"""

from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src/formality3/resources/lexicons"

HEADER = """\
# lexicon: {name}
# version: 1
# provenance: curated word list maintained with this toolkit
# format: {fmt}
"""

SLANG = """
ain't gonna wanna gotta dunno kinda sorta cuz coz nah yep nope yeah
dude bro gimme lemme outta betcha whatcha gotcha hella lowkey sus
freakin frickin sucks crap dang heck
"""

NETSPEAK = """
lol lmao rofl lmfao idk btw imo imho brb thx ty np smh tbh irl afaik
fyi wtf omw ikr fwiw ttyl jk nvm u r ur b4 gr8 pls plz ppl bc rn tbf
xoxo wbu hbu idc ily irl imma
"""

INTERJECTIONS = """
wow whoa oops ouch ugh yay hmm hm huh omg oh ah aw eh meh yikes phew
haha hehe hooray alas gosh jeez geez darn oof welp
"""

ABBREVIATIONS = """
info asap approx appt convo pic pics vid vids min mins sec secs prob
probs def fav fave bio rec recs stats admin intro combo promo congrats
"""

HEDGES = """
it appears that
it seems that
it appears
it seems
may suggest
might suggest
may indicate
might indicate
may imply
it is possible that
it is likely that
it is unlikely that
it could be argued that
it may be that
it might be that
it is suggested that
it would appear
appears to
seems to
tends to
arguably
presumably
perhaps
possibly
apparently
conceivably
reportedly
allegedly
to some extent
in some respects
more or less
"""

DIRECT_ADDRESS = """
hey hi hello yo howdy hiya
"""

# surface followed by ranked POS classes, first = default
POS_LEXICON = """
the article
a article
an article

i pronoun
you pronoun
he pronoun
she pronoun
it pronoun
we pronoun
they pronoun
me pronoun
him pronoun
her pronoun
us pronoun
them pronoun
my pronoun
your pronoun
his pronoun
its pronoun
our pronoun
their pronoun
mine pronoun
yours pronoun
hers pronoun
ours pronoun
theirs pronoun
myself pronoun
yourself pronoun
himself pronoun
herself pronoun
itself pronoun
ourselves pronoun
yourselves pronoun
themselves pronoun
this pronoun
that pronoun conjunction
these pronoun
those pronoun
who pronoun
whom pronoun
whose pronoun
which pronoun
what pronoun
someone pronoun
somebody pronoun
something pronoun
anyone pronoun
anybody pronoun
anything pronoun
everyone pronoun
everybody pronoun
everything pronoun
nobody pronoun
nothing pronoun
one pronoun numeral

of preposition
in preposition
to preposition
for preposition
with preposition
on preposition
at preposition
by preposition
from preposition
about preposition
as preposition conjunction
into preposition
through preposition
after preposition
over preposition
between preposition
out preposition adverb
against preposition
during preposition
without preposition
before preposition conjunction
under preposition
around preposition
among preposition
within preposition
toward preposition
towards preposition
upon preposition
concerning preposition
regarding preposition
despite preposition
beyond preposition
behind preposition
above preposition
below preposition
near preposition
off preposition
across preposition
along preposition
past preposition
per preposition
via preposition
onto preposition
beside preposition
besides preposition

and conjunction
but conjunction
or conjunction
nor conjunction
so conjunction adverb
yet conjunction adverb
because conjunction
although conjunction
though conjunction
while conjunction
if conjunction
unless conjunction
since conjunction
whereas conjunction
whether conjunction
once conjunction adverb
until conjunction
than conjunction

am verb
is verb
are verb
was verb
were verb
be verb
been verb
being verb
have verb
has verb
had verb
having verb
do verb
does verb
did verb
doing verb
done verb
will verb
would verb
can verb
could verb
shall verb
should verb
may verb
might verb
must verb
go verb
goes verb
going verb
went verb
gone verb
get verb
gets verb
getting verb
got verb
gotten verb
make verb
makes verb
making verb
made verb
know verb
knows verb
knowing verb
knew verb
known verb
think verb
thinks verb
thinking verb
thought verb noun
see verb
sees verb
seeing verb
saw verb
seen verb
come verb
comes verb
coming verb
came verb
want verb
wants verb
wanted verb
wanting verb
say verb
says verb
saying verb
said verb
take verb
takes verb
taking verb
took verb
taken verb
find verb
finds verb
finding verb
found verb
give verb
gives verb
giving verb
gave verb
given verb
tell verb
tells verb
telling verb
told verb
work verb noun
works verb
working verb
worked verb
call verb
calls verb
calling verb
called verb
try verb
tries verb
trying verb
tried verb
ask verb
asks verb
asking verb
asked verb
need verb
needs verb
needed verb
feel verb
feels verb
feeling verb
felt verb
become verb
becomes verb
becoming verb
became verb
leave verb
leaves verb
leaving verb
left verb
put verb
puts verb
putting verb
mean verb adjective
means verb
meaning verb noun
meant verb
keep verb
keeps verb
keeping verb
kept verb
let verb
lets verb
letting verb
begin verb
begins verb
beginning verb
began verb
begun verb
seem verb
seems verb
seemed verb
seeming verb
help verb
helps verb
helping verb
helped verb
talk verb
talks verb
talking verb
talked verb
turn verb
turns verb
turning verb
turned verb
start verb
starts verb
starting verb
started verb
show verb noun
shows verb
showing verb
showed verb
shown verb
hear verb
hears verb
hearing verb
heard verb
play verb
plays verb
playing verb
played verb
run verb
runs verb
running verb
ran verb
move verb
moves verb
moving verb
moved verb
live verb
lives verb
living verb
lived verb
believe verb
believes verb
believed verb
happen verb
happens verb
happening verb
happened verb
occur verb
occurs verb
occurring verb
occurred verb
remain verb
remains verb
remaining verb
remained verb
appear verb
appears verb
appearing verb
appeared verb
buy verb
buys verb
buying verb
bought verb
wait verb
waits verb
waiting verb
waited verb
send verb
sends verb
sent verb
expect verb
expects verb
expected verb
build verb
builds verb
built verb
stay verb
stays verb
stayed verb
fall verb
falls verb
fell verb
fallen verb
cut verb
cuts verb
reach verb
reached verb
raise verb
raised verb
pass verb
passed verb
sell verb
sells verb
sold verb
require verb
requires verb
required verb
report verb noun
reports verb noun
reported verb
decide verb
decides verb
decided verb
pull verb
pulled verb
return verb
returned verb
explain verb
explains verb
explained verb
hope verb noun
hopes verb
hoped verb
develop verb
developed verb
carry verb
carried verb
break verb
breaks verb
broke verb
broken verb
receive verb
receives verb
received verb
agree verb
agrees verb
agreed verb
support verb noun
supported verb
hit verb
hits verb
eat verb
eats verb
ate verb
eaten verb
cover verb
covered verb
catch verb
catches verb
caught verb
draw verb
draws verb
drew verb
drawn verb
choose verb
chooses verb
chose verb
chosen verb
sleep verb
sleeps verb
sleeping verb
slept verb
chase verb
chases verb
chasing verb
chased verb
love verb noun
loves verb
loved verb
hate verb
hates verb
hated verb
stop verb
stops verb
stopped verb
submit verb
submits verb
submitted verb
reject verb
rejects verb
rejected verb
approve verb
approved verb
resolve verb
resolves verb
resolved verb
wonder verb
wonders verb
wondered verb
guess verb
guesses verb
guessed verb
suggest verb
suggests verb
suggested verb
indicate verb
indicates verb
indicated verb
consider verb
considers verb
considered verb
provide verb
provides verb
provided verb
include verb
includes verb
included verb
write verb
writes verb
wrote verb
written verb
read verb
reads verb
use verb noun
uses verb
used verb
win verb
wins verb
won verb
lose verb
loses verb
lost verb
pay verb
pays verb
paid verb
meet verb
meets verb
met verb
hold verb
holds verb
held verb
spend verb
spends verb
spent verb
bring verb
brings verb
brought verb
teach verb
teaches verb
taught verb
fight verb
fights verb
fought verb
like verb preposition
likes verb
liked verb
sound verb noun
sounds verb
sounded verb
look verb
looks verb
looking verb
looked verb

good adjective
new adjective
first adjective
last adjective
long adjective
great adjective
little adjective
own adjective
other adjective
old adjective
right adjective adverb
big adjective
high adjective
different adjective
small adjective
large adjective
next adjective
early adjective adverb
young adjective
important adjective
few adjective
public adjective
bad adjective
same adjective
able adjective
weird adjective
unexpected adjective
unclear adjective
sure adjective
happy adjective
sad adjective
nice adjective
fine adjective
cool adjective
warm adjective
cold adjective
hot adjective
free adjective
true adjective
false adjective
real adjective
whole adjective
single adjective
certain adjective
clear adjective
possible adjective
likely adjective
unlikely adjective
recent adjective
strong adjective
weak adjective
late adjective adverb
easy adjective
hard adjective adverb
quick adjective
slow adjective
wrong adjective
final adjective
short adjective
tall adjective
deep adjective
flat adjective
rich adjective
poor adjective
safe adjective
serious adjective
funny adjective
strange adjective
formal adjective
informal adjective
casual adjective
common adjective
rare adjective
significant adjective
available adjective
similar adjective
entire adjective
favorite adjective
blue adjective noun
red adjective noun
green adjective noun
best adjective
better adjective
worse adjective
worst adjective
open adjective verb

not adverb
very adverb
just adverb
now adverb
then adverb
there adverb
here adverb
quite adverb
too adverb
also adverb
well adverb
only adverb
even adverb
back adverb noun
still adverb
really adverb
never adverb
always adverb
often adverb
sometimes adverb
usually adverb
soon adverb
already adverb
almost adverb
enough adverb
away adverb
again adverb
ever adverb
far adverb
maybe adverb
probably adverb
actually adverb
definitely adverb
certainly adverb
indeed adverb
together adverb
nowhere adverb
somewhere adverb
anywhere adverb
everywhere adverb
tomorrow adverb noun
today adverb noun
yesterday adverb noun
fast adverb adjective
pretty adverb adjective
once adverb
twice adverb
please adverb
no adverb
yes adverb
when adverb conjunction
where adverb
why adverb
how adverb
instead adverb
rather adverb
perhaps adverb
however adverb
therefore adverb
moreover adverb
furthermore adverb
nevertheless adverb
quickly adverb
slowly adverb

wow interjection
whoa interjection
oops interjection
ouch interjection
ugh interjection
yay interjection
hmm interjection
huh interjection
omg interjection
oh interjection
ah interjection
aw interjection
eh interjection
meh interjection
yikes interjection
phew interjection
haha interjection
hehe interjection
hooray interjection
alas interjection
gosh interjection
jeez interjection
geez interjection

time noun
year noun
years noun
people noun
way noun
day noun
days noun
man noun
men noun
woman noun
women noun
child noun
children noun
world noun
life noun
hand noun
part noun
eye noun
eyes noun
place noun
week noun
case noun
point noun
government noun
company noun
number noun
group noun
problem noun
fact noun
cat noun
cats noun
dog noun
dogs noun
bird noun
birds noun
house noun
home noun
room noun
mother noun
father noun
friend noun
friends noun
question noun
questions noun
money noun
night noun
water noun
thing noun
things noun
event noun
events noun
nature noun
story noun
month noun
lot noun
study noun
book noun
books noun
word noun
words noun
business noun
issue noun
side noun
kind noun adjective
head noun
school noun
student noun
students noun
teacher noun
country noun
city noun
family noun
state noun
war noun
history noun
result noun
results noun
change noun verb
reason noun
morning noun
evening noun
afternoon noun
noon noun
car noun
road noun
door noun
body noun
game noun
line noun
end noun verb
meeting noun
meetings noun
member noun
law noun
name noun
idea noun
ideas noun
moment noun
light noun
paper noun
sentence noun
sentences noun
answer noun verb
answers noun
color noun
colors noun
movie noun
movies noun
music noun
song noun
songs noun
food noun
person noun
air noun
fire noun
earth noun
field noun
force noun
foot noun
boy noun
girl noun
age noun
guy noun
guys noun
team noun
news noun
test noun
class noun
course noun
space noun
top noun
church noun
risk noun
model noun
example noun
research noun
university noun
phone noun
site noun
article noun
website noun
email noun
mail noun
computer noun
internet noun
job noun
jobs noun
hour noun
hours noun
minute noun
minutes noun
second noun numeral
seconds noun
station noun
truth noun
art noun
board noun
kid noun
kids noun
baby noun
babies noun
account noun
level noun
plan noun
price noun
series noun
tax noun
rest noun
speech noun
style noun
tone noun
language noun
grammar noun
spelling noun
matter noun verb
matters noun verb
proposal noun
proposals noun
outcome noun
"""

# common words beyond the POS lexicon; keeps the spelling check from
# flagging ordinary prose
DICTIONARY_EXTRA = """
ability accept access account act action actual add address administration
admit adult affect afford afternoon agency agent ago agreement ahead allow
alone already although amount analysis animal announce annual anybody apply
approach area argue arm arrive attention audience author authority
available avoid bag ball bank bar base beat beautiful bed begin behavior
benefit beside bill bit black blood blue boat bone born both box break
brother budget building campaign cancer candidate capital card care career
cell center central century chair challenge chance character charge check
chest choice citizen civil claim clearly close coach collection college
commercial community compare concern condition conference consumer contain
continue control cost couple court create crime culture cup current
customer data daughter dead deal death debate decade decision defense
degree democratic describe design despite detail determine difference
difficult dinner direction director discover discussion disease doctor drop
drug east economic economy edge education effect effort eight either
election else employee energy enjoy entire environment especially
establish evidence exactly executive exist experience expert face factor
fail fear federal feeling figure fill film finally financial finger finish
firm fish five floor fly focus follow foreign forget form former forward
four friend front full fund future garden gas general generation glass
goal grow growth gun hair half hang hard head health heart heat heavy
herself highly himself hispanic hold hospital hotel huge human hundred
husband image imagine impact improve individual industry inside instead
institution interest interesting international interview investment
involve item itself join key kitchen knowledge land language later laugh
lawyer lay lead leader learn legal less letter lie list listen local
longer machine magazine main maintain major majority manage management
manager market marriage material matter measure media medical medicine
member memory mention message method middle military million mind minute
miss mission model modern mouth movement much music must nation national
natural nearly necessary network never nice none note notice occasion
offer office officer official oil okay onto operation opportunity option
order organization others outside owner page pain painting parent
particular particularly partner party patient pattern peace perform
performance performed period personal phone physical picture piece plant
player pm point police policy political politics popular population
position positive practice prepare president pressure prevent price
private probably process produce product production professional
professor program project property protect prove provide purpose quality
quarter quite race radio range rate rather reality realize receive
recently recognize record reduce reflect region relate relationship
religious remember remove represent republican resource respond response
responsibility reveal rise rock role rule sale scene science scientist
score sea season seat section security seek sense series service seven
several sex sexual shake share shoot shopping shot shoulder sign
significant simple simply sing sister sit situation six size skill skin
social society soldier somebody son sort source southern speak special
specific sport spring staff stage standard star statement station step
stock store strategy street structure student stuff subject success
successful suddenly suffer summer sun surface system table tax teach
technology television term thank themselves theory thousand threat three
throw thus toward town trade traditional training travel treat treatment
tree trial trip trouble truck trust two type understand unit update
value various victim view violence visit voice vote wall watch wear
weapon wedding weekend west western wide wife wind window wish
worker yard yeah young yourself
submitted directly manner noted regarding individuals regards
"""


def _words(block: str) -> list[str]:
    return sorted(set(block.split()))


def _lines(block: str) -> list[str]:
    return sorted({line.strip() for line in block.strip().splitlines() if line.strip()})


def write(name: str, fmt: str, body_lines: list[str]) -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    path = OUT / f"{name}.txt"
    text = HEADER.format(name=name, fmt=fmt) + "\n".join(body_lines) + "\n"
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path} ({len(body_lines)} entries)")


def main() -> None:
    write("slang", "one lowercase entry per line", _words(SLANG))
    write("netspeak", "one lowercase entry per line", _words(NETSPEAK))
    write("interjections", "one lowercase entry per line", _words(INTERJECTIONS))
    write("abbreviations", "one lowercase entry per line", _words(ABBREVIATIONS))
    write("hedges", "one lowercase phrase per line (may be multi-word)", _lines(HEDGES))
    write("direct_address", "one lowercase entry per line", _words(DIRECT_ADDRESS))

    pos_lines = _lines(POS_LEXICON)
    write("pos_lexicon", "surface followed by ranked POS classes", pos_lines)

    dictionary = set(_words(DICTIONARY_EXTRA))
    for line in pos_lines:
        dictionary.add(line.split()[0])
    write("dictionary", "one lowercase entry per line", sorted(dictionary))


if __name__ == "__main__":
    main()
