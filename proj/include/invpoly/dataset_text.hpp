#pragma once

// Built-in copy of data/singularities.dat.

namespace invpoly {

inline constexpr const char* kBuiltinDataset = R"DATA(# invpoly dataset v1
# name|polynomial|A (per coordinate)|Gamma|dual|class[|transpose]
E12|x^2+y^3+z^7|2,3,7|2,3,7|E12|exceptional-unimodal
E13|x^2+y^3+yz^5|2,4,5|2,3,8|Z11|exceptional-unimodal
E14|x^3+y^2+yz^4|3,3,4|2,3,9|Q10|exceptional-unimodal
Z11|x^2+zy^3+z^5|2,3,8|2,4,5|E13|exceptional-unimodal
Z12|x^2+zy^3+yz^4|2,4,6|2,4,6|Z12|exceptional-unimodal
Z13|x^2+xy^3+yz^3|3,3,5|2,4,7|Q11|exceptional-unimodal
Q10|x^3+zy^2+z^4|2,3,9|3,3,4|E14|exceptional-unimodal
Q11|x^2y+y^3z+z^3|2,4,7|3,3,5|Z13|exceptional-unimodal
Q12|x^3+zy^2+yz^3|3,3,6|3,3,6|Q12|exceptional-unimodal
W12|x^5+y^2+yz^2|2,5,5|2,5,5|W12|exceptional-unimodal
W13|x^2+xy^2+yz^4|3,4,4|2,5,6|S11|exceptional-unimodal
S11|x^2y+y^2z+z^4|2,5,6|3,4,4|W13|exceptional-unimodal
S12|x^3y+y^2z+z^2x|3,4,5|3,4,5|S12|exceptional-unimodal
U12|x^4+zy^2+yz^2|4,4,4|4,4,4|U12|exceptional-unimodal
A1|xy+yz+zx|1,1,1|1,1,1|A1|ADE
A2|xy+y^2z+zx|2,1,1|1,1,2|A2|ADE
A3|xy+y^3z+zx|3,1,1|1,1,3|A3|ADE
A4|xy+y^4z+zx|4,1,1|1,1,4|A4|ADE
A5|xy+y^5z+zx|5,1,1|1,1,5|A5|ADE
D4|x^2+y^2z+yz^2|2,2,2|2,2,2|D4|ADE
D5|x^2+xy^2+yz^2|2,2,3|2,2,3|D5|ADE
D6|x^2+y^2z+yz^3|2,2,4|2,2,4|D6|ADE
D7|x^2+xy^3+yz^2|2,2,5|2,2,5|D7|ADE
E6|x^3+y^2+yz^2|3,2,3|3,2,3|E6|ADE
E7|x^2+y^3+yz^3|2,3,4|2,3,4|E7|ADE
E8|x^2+y^3+z^5|2,3,5|2,3,5|E8|ADE
J3,0|x^6y+y^3+z^2|4,6,2|2,3,10|Z13|bimodal-head|x^6+xy^3+z^2
Z1,0|x^5y+xy^3+z^2|4,8,2|2,4,8|Z1,0|bimodal-head|x^5y+xy^3+z^2
Q2,0|x^4y+y^3+xz^2|4,10,2|3,3,7|Z17|bimodal-head|x^4z+xy^3+z^2
W1,0|x^6+y^2+yz^2|6,6,2|2,6,6|W1,0|bimodal-head|x^6+y^2z+z^2
S1,0|x^5+xy^2+yz^2|6,8,2|3,5,5|W17|bimodal-head|x^5y+y^2z+z^2
U1,0|x^3+xy^2+yz^3|4,6,3|3,4,6|U1,0|bimodal-head|x^3y+y^2z+z^3
E18|x^5z+y^3+z^2|3,3,5|2,3,12|Q12|bimodal-exceptional|x^5+y^3+xz^2
E19|x^7y+y^3+z^2|2,4,7|2,3,12|Z1,0|bimodal-exceptional|x^7+xy^3+z^2
E20|x^11+y^3+z^2|2,3,11|2,3,11|E20|bimodal-exceptional|x^11+y^3+z^2
Z17|x^4z+xy^3+z^2|3,3,7|2,4,10|Q2,0|bimodal-exceptional|x^4y+y^3+xz^2
Z18|x^6y+xy^3+z^2|2,4,10|2,4,10|Z18|bimodal-exceptional|x^6y+xy^3+z^2
Z19|x^9+xy^3+z^2|2,3,16|2,4,9|E25|bimodal-exceptional|x^9y+y^3+z^2
Q16|x^4z+y^3+xz^2|3,3,9|3,3,9|Q16|bimodal-exceptional|x^4z+y^3+xz^2
Q17|x^5y+y^3+xz^2|2,4,13|3,3,9|Z2,0|bimodal-exceptional|x^5z+xy^3+z^2
Q18|x^8+y^3+xz^2|2,3,21|3,3,8|E30|bimodal-exceptional|x^8z+y^3+z^2
W17|x^5z+yz^2+y^2|3,5,5|2,6,8|S1,0|bimodal-exceptional|x^5+xz^2+y^2z
W18|x^7+y^2+yz^2|2,7,7|2,7,7|W18|bimodal-exceptional|x^7+y^2z+z^2
S16|x^4y+xz^2+y^2z|3,5,7|3,5,7|S16|bimodal-exceptional|x^4y+xz^2+y^2z
S17|x^6+xy^2+yz^2|2,7,10|3,6,6|X2,0|bimodal-exceptional|x^6y+y^2z+z^2
U16|x^5+y^2z+yz^2|5,5,5|5,5,5|U16|bimodal-exceptional|x^5+y^2z+yz^2
Genus2|x^2+xy^3+yz^5|5,5,5|-|-|other
Genus3|x^3y+y^3z+z^3x|7,7,7|-|-|other
Quintic|x^5+y^5+z^5|5,5,5|-|-|other
Quadric2|x^2+y^2|-|-|Quadric2|other
Cubic2|x^3+y^3|-|-|Cubic2|other
)DATA";

}  // namespace invpoly
