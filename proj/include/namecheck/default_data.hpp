// Copyright 2026 The namecheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tools/embed_data.py from data/. Do not edit.

#ifndef NAMECHECK_DEFAULT_DATA_HPP
#define NAMECHECK_DEFAULT_DATA_HPP

#include <string_view>

namespace namecheck {

inline constexpr std::string_view kDefaultLexicon = R"nc(# namecheck part-of-speech lexicon, version 1
# word<TAB>tag; several lines for one word list its candidate tags in
# preference order. Tags: Verb VerbPastParticiple Noun Adjective
# Preposition Other.
a	Other
about	Preposition
absent	Adjective
accept	Verb
access	Verb
access	Noun
account	Noun
acquire	Verb
action	Noun
active	Adjective
adapter	Noun
add	Verb
address	Noun
after	Preposition
against	Preposition
alive	Adjective
all	Other
allow	Verb
also	Other
always	Other
amount	Noun
an	Other
and	Other
any	Other
api	Noun
append	Verb
apply	Verb
are	Verb
argument	Noun
array	Noun
as	Preposition
assertion	Noun
assign	Verb
async	Adjective
asynchronous	Adjective
at	Preposition
attach	Verb
attribute	Noun
authenticate	Verb
authorize	Verb
available	Adjective
avoid	Verb
bag	Noun
balance	Noun
bar	Noun
barrier	Noun
baz	Noun
be	Verb
bean	Noun
become	Verb
been	Verb
before	Preposition
begin	Verb
begun	VerbPastParticiple
being	Verb
between	Preposition
big	Adjective
bind	Verb
blank	Adjective
body	Noun
boolean	Noun
both	Other
bound	VerbPastParticiple
boundary	Noun
break	Verb
broken	VerbPastParticiple
buffer	Noun
build	Verb
builder	Noun
built	VerbPastParticiple
busy	Adjective
button	Noun
by	Preposition
byte	Noun
cache	Noun
calculate	Verb
call	Verb
call	Noun
callback	Noun
can	Other
cancel	Verb
cannot	Other
capacity	Noun
case	Noun
certificate	Noun
change	Verb
change	Noun
channel	Noun
char	Noun
character	Noun
charset	Noun
check	Verb
check	Noun
child	Noun
children	Noun
choose	Verb
chosen	VerbPastParticiple
circle	Noun
city	Noun
class	Noun
clean	Verb
clean	Adjective
clear	Verb
clear	Adjective
click	Verb
client	Noun
clone	Verb
close	Verb
close	Adjective
closed	Adjective
code	Noun
collection	Noun
color	Noun
column	Noun
come	Verb
commit	Verb
compare	Verb
compile	Verb
complex	Adjective
component	Noun
compute	Verb
concurrent	Adjective
config	Noun
configuration	Noun
configure	Verb
connect	Verb
connection	Noun
constant	Noun
consume	Verb
contain	Verb
container	Noun
contains	Verb
content	Noun
context	Noun
control	Verb
control	Noun
controller	Noun
convert	Verb
copy	Verb
copy	Noun
correct	Adjective
could	Other
count	Verb
count	Noun
counter	Noun
country	Noun
create	Verb
credential	Noun
csv	Noun
currency	Noun
current	Adjective
cursor	Noun
customer	Noun
cut	VerbPastParticiple
data	Noun
database	Noun
date	Noun
db	Noun
dead	Adjective
decimal	Noun
decode	Verb
decrement	Verb
decrypt	Verb
default	Noun
delegate	Noun
delete	Verb
deploy	Verb
dequeue	Verb
descriptor	Noun
deserialize	Verb
design	Verb
design	Noun
detach	Verb
detect	Verb
dialog	Noun
dictionary	Noun
did	Verb
different	Adjective
digit	Noun
directory	Noun
dirty	Adjective
disable	Verb
disconnect	Verb
display	Verb
display	Noun
do	Verb
document	Noun
does	Verb
done	VerbPastParticiple
double	Noun
download	Verb
draw	Verb
duplicate	Adjective
duration	Noun
during	Preposition
dynamic	Adjective
each	Other
edge	Noun
either	Other
element	Noun
else	Other
email	Noun
emit	Verb
empty	Verb
empty	Adjective
enable	Verb
encode	Verb
encoding	Noun
encrypt	Verb
enqueue	Verb
ensure	Verb
entity	Noun
entry	Noun
equal	Adjective
equals	Verb
error	Noun
escape	Verb
evaluate	Verb
event	Noun
every	Other
exceed	Verb
except	Preposition
exception	Noun
execute	Verb
executor	Noun
expect	Verb
expectation	Noun
expired	Adjective
expression	Noun
extension	Noun
external	Adjective
extract	Verb
factory	Noun
fail	Verb
false	Adjective
fetch	Verb
field	Noun
file	Noun
file	Verb
filter	Verb
filter	Noun
final	Adjective
find	Verb
fire	Verb
fire	Noun
first	Adjective
fixture	Noun
flag	Noun
float	Noun
flush	Verb
folder	Noun
font	Noun
foo	Noun
for	Preposition
format	Verb
format	Noun
found	VerbPastParticiple
frame	Noun
fresh	Adjective
from	Preposition
full	Adjective
future	Noun
generate	Verb
get	Verb
give	Verb
given	VerbPastParticiple
global	Adjective
go	Verb
gone	VerbPastParticiple
got	VerbPastParticiple
gotten	VerbPastParticiple
grant	Verb
graph	Noun
group	Verb
group	Noun
guid	Noun
had	Verb
handle	Verb
handle	Noun
handler	Noun
has	Verb
hash	Verb
hash	Noun
hashmap	Noun
have	Verb
header	Noun
heap	Noun
height	Noun
held	VerbPastParticiple
hidden	Adjective
hide	Verb
high	Adjective
hit	VerbPastParticiple
hold	Verb
host	Noun
html	Noun
http	Noun
https	Noun
icon	Noun
id	Noun
if	Preposition
ignore	Verb
illegal	Adjective
image	Noun
immutable	Adjective
in	Preposition
inactive	Adjective
incorrect	Adjective
increment	Verb
index	Noun
index	Verb
init	Verb
initial	Adjective
initialize	Verb
inner	Adjective
input	Noun
input	Verb
insert	Verb
install	Verb
install	Noun
instance	Noun
integer	Noun
internal	Adjective
interval	Noun
into	Preposition
invalid	Adjective
invoice	Noun
invoke	Verb
is	Verb
item	Noun
iterate	Verb
iterator	Noun
job	Noun
join	Verb
json	Noun
keep	Verb
kept	VerbPastParticiple
key	Noun
key	Verb
know	Verb
known	VerbPastParticiple
label	Noun
language	Noun
large	Adjective
last	Adjective
latch	Noun
launch	Verb
layout	Noun
leaf	Noun
leave	Verb
left	VerbPastParticiple
legal	Adjective
length	Noun
letter	Noun
level	Noun
level	Verb
limit	Verb
limit	Noun
line	Noun
link	Noun
list	Noun
list	Verb
listener	Noun
literal	Noun
load	Verb
load	Noun
local	Adjective
locale	Noun
lock	Verb
lock	Noun
log	Verb
log	Noun
login	Verb
logout	Verb
long	Noun
long	Adjective
lose	Verb
lost	VerbPastParticiple
low	Adjective
lower	Adjective
made	VerbPastParticiple
make	Verb
manager	Noun
mandatory	Adjective
map	Verb
map	Noun
match	Verb
match	Noun
matrix	Noun
max	Adjective
maximum	Adjective
may	Other
measure	Verb
member	Noun
menu	Noun
merge	Verb
merge	Noun
message	Noun
metadata	Noun
method	Noun
might	Other
min	Adjective
minimum	Adjective
missing	Adjective
mock	Noun
mode	Noun
mode	Verb
model	Noun
module	Noun
money	Noun
move	Verb
multiple	Adjective
must	Other
mutable	Adjective
mutex	Noun
name	Noun
name	Verb
namespace	Noun
negative	Adjective
neighbor	Noun
neither	Other
nested	Adjective
never	Other
new	Adjective
next	Adjective
no	Other
node	Noun
node	Verb
nonexistent	Adjective
normalize	Verb
not	Other
notify	Verb
null	Adjective
number	Noun
object	Noun
of	Preposition
offer	Verb
offer	Noun
offset	Noun
old	Adjective
on	Preposition
one	Noun
only	Other
open	Verb
open	Adjective
option	Noun
optional	Adjective
or	Other
order	Verb
order	Noun
otherwise	Other
outcome	Noun
outer	Adjective
output	Noun
output	Verb
over	Preposition
overflow	Verb
owner	Noun
package	Noun
packet	Noun
pad	Verb
page	Noun
paid	VerbPastParticiple
paint	Verb
pair	Noun
panel	Noun
parameter	Noun
parent	Noun
parse	Verb
parser	Noun
partial	Adjective
pass	Verb
password	Noun
path	Noun
pattern	Noun
pay	Verb
payload	Noun
payment	Noun
peek	Verb
per	Preposition
permission	Noun
person	Noun
plugin	Noun
point	Noun
pointer	Noun
policy	Noun
poll	Verb
pool	Noun
pop	Verb
port	Noun
position	Noun
positive	Adjective
present	Adjective
preserve	Verb
prevent	Verb
previous	Adjective
price	Noun
primary	Adjective
principal	Noun
print	Verb
print	Noun
private	Adjective
process	Verb
process	Noun
produce	Verb
product	Noun
promise	Noun
propagate	Verb
property	Noun
protocol	Noun
provide	Verb
provider	Noun
proxy	Noun
public	Adjective
publish	Verb
push	Verb
put	Verb
put	VerbPastParticiple
query	Verb
query	Noun
queue	Noun
qux	Noun
raise	Verb
range	Noun
read	Verb
read	VerbPastParticiple
reader	Noun
readonly	Adjective
ready	Adjective
receive	Verb
record	Noun
record	Verb
recover	Verb
rectangle	Noun
recycle	Verb
reference	Noun
refresh	Verb
region	Noun
register	Verb
reject	Verb
release	Verb
release	Noun
reload	Verb
remote	Adjective
remove	Verb
rename	Verb
replace	Verb
report	Verb
report	Noun
request	Noun
request	Verb
require	Verb
required	Adjective
reset	Verb
resolve	Verb
resource	Noun
response	Noun
restore	Verb
result	Noun
result	Verb
retry	Verb
return	Verb
return	Noun
reuse	Verb
revoke	Verb
role	Noun
rollback	Verb
root	Noun
row	Noun
rule	Noun
run	Verb
run	Noun
run	VerbPastParticiple
safe	Adjective
same	Adjective
sanitize	Verb
save	Verb
scan	Verb
scan	Noun
schedule	Verb
scheduler	Noun
schema	Noun
scope	Noun
screen	Noun
search	Verb
search	Noun
secondary	Adjective
see	Verb
seen	VerbPastParticiple
select	Verb
sell	Verb
semaphore	Noun
send	Verb
sent	VerbPastParticiple
sentence	Noun
sequence	Noun
sequence	Verb
serialize	Verb
server	Noun
service	Noun
session	Noun
set	Noun
set	Verb
set	VerbPastParticiple
setting	Noun
shall	Other
shape	Noun
short	Noun
short	Adjective
should	Other
show	Verb
shown	VerbPastParticiple
shut	VerbPastParticiple
shutdown	Verb
signal	Verb
signal	Noun
signature	Noun
simple	Adjective
single	Adjective
size	Noun
skip	Verb
sleep	Verb
small	Adjective
socket	Noun
sold	VerbPastParticiple
sort	Verb
sort	Noun
split	Verb
split	Noun
split	VerbPastParticiple
spread	VerbPastParticiple
spy	Noun
sql	Noun
ssl	Noun
stack	Noun
stale	Adjective
start	Verb
start	Noun
state	Noun
state	Verb
statement	Noun
static	Adjective
status	Noun
stop	Verb
stop	Noun
store	Verb
stream	Noun
street	Noun
string	Noun
strip	Verb
stub	Noun
style	Noun
submit	Verb
subscribe	Verb
successful	Adjective
suite	Noun
sum	Noun
support	Verb
support	Noun
symbol	Noun
sync	Verb
sync	Adjective
synchronous	Adjective
table	Noun
tag	Verb
tag	Noun
take	Verb
taken	VerbPastParticiple
task	Noun
tcp	Noun
tell	Verb
template	Noun
test	Verb
test	Noun
text	Noun
than	Preposition
the	Other
theme	Noun
then	Other
thread	Noun
three	Noun
threshold	Noun
through	Preposition
throw	Verb
thrown	VerbPastParticiple
throws	Verb
time	Noun
timer	Noun
timestamp	Noun
tls	Noun
to	Preposition
toggle	Verb
token	Noun
told	VerbPastParticiple
too	Other
total	Noun
total	Adjective
transaction	Noun
transform	Verb
traverse	Verb
tree	Noun
trie	Noun
trigger	Verb
trim	Verb
triple	Noun
true	Adjective
truncate	Verb
tuple	Noun
two	Noun
type	Noun
type	Verb
udp	Noun
unavailable	Adjective
unbind	Verb
under	Preposition
unescape	Verb
uninstall	Verb
unique	Adjective
unknown	Adjective
unless	Preposition
unlock	Verb
unregister	Verb
unsafe	Adjective
unsuccessful	Adjective
until	Preposition
unwrap	Verb
update	Verb
update	Noun
upload	Verb
upon	Preposition
upper	Adjective
uri	Noun
url	Noun
use	Verb
use	Noun
user	Noun
uuid	Noun
valid	Adjective
validate	Verb
value	Noun
value	Verb
values	Noun
variable	Noun
vector	Noun
verify	Verb
version	Noun
vertex	Noun
very	Other
via	Preposition
view	Verb
view	Noun
visible	Adjective
visit	Verb
wait	Verb
wait	Noun
was	Verb
were	Verb
when	Preposition
while	Preposition
whole	Adjective
widget	Noun
width	Noun
will	Other
window	Noun
with	Preposition
within	Preposition
without	Preposition
word	Noun
worker	Noun
would	Other
wrap	Verb
wrapper	Noun
writable	Adjective
write	Verb
writer	Noun
written	VerbPastParticiple
xml	Noun
yaml	Noun
zero	Noun
zone	Noun
)nc";

inline constexpr std::string_view kDefaultNameRegexes = R"nc(# namecheck test-name regular expressions, version 1
# id<TAB>expression. Named groups action, predicate and scenario become the
# extracted components. Ids starting with "trycatch." form the Try Catch name
# pattern; all other entries are tried in file order as Regex Match.

trycatch.throws-when	^(?:test)?_?(?<action>[A-Za-z0-9]+?)_?Throws_?(?<predicate>[A-Z][A-Za-z0-9]*?)_?(?:When|If|On|For)_?(?<scenario>[A-Z][A-Za-z0-9]*)$
trycatch.throws	^(?:test)?_?(?<action>[A-Za-z0-9]+?)_?Throws_?(?<predicate>[A-Z][A-Za-z0-9]*)$
should-when	^(?:test)?_?[Ss]hould_?(?<predicate>[A-Z][A-Za-z0-9]*?)_?(?:When|If|For|On|Given)_?(?<scenario>[A-Z][A-Za-z0-9]*)$
action-after	^(?:test)?_?(?<action>[A-Za-z][A-Za-z0-9]*?)_?After_?(?<scenario>[A-Z][A-Za-z0-9]*)$
given-when-then	^(?:test)?_?[Gg]iven_?(?<scenario>[A-Za-z0-9]+?)_?When_?(?<action>[A-Za-z0-9]+?)_?Then_?(?<predicate>[A-Za-z0-9]+)$
when-then	^(?:test)?_?[Ww]hen_?(?<scenario>[A-Za-z0-9]+?)_?Then_?(?<predicate>[A-Za-z0-9]+)$
method-state-expected	^(?:test)?_?(?<action>[A-Za-z0-9]+)_(?<scenario>[A-Za-z0-9]+)_(?<predicate>[A-Za-z0-9]+)$
should	^(?:test)?_?[Ss]hould_?(?<predicate>[A-Z][A-Za-z0-9]*)$
)nc";

}  // namespace namecheck

#endif  // NAMECHECK_DEFAULT_DATA_HPP
