// A small bundled phantom image so the console can be exercised without
// uploading anything: seven ring-shaped seeds and one bubble.

export const SAMPLE_FILE_NAME = "sample_phantom.png";

const PARTS: string[] = [
  "iVBORw0KGgoAAAANSUhEUgAAAUAAAAFACAAAAADo+/p2AAC5tklEQVR42jT9zbJm3ZPkB7l7xNon3+JGABMMuBep6l/V1ZKpJWEmQBJcSXepmgEjRNd3X4fU",
  "6maAYWBwIZjqzfOsCHcGO3uSo8w8mc+z91oRHu6/4P8Yxc8ltcweGAvJoqlb9yRR6FqiP6pNuUbknBsqAnx+UnZxvpilFbmAm2MhCvasogUCwl/ffD6VLIq3",
  "UzZZdcMQCeWK+3M4EA1mhW3XZR4AwW3Tx9OxsmxgSS7aATrrB8GHbRkyGfEj1HSwcvFS6YXPykO0hcirvgejORMBRKpuUuYIvfOQvz9KpiBEQ9KVles/TXMl",
  "U4GylgJFCbDor4xqCKTDstWAfRTDaEAI8WlCahQMASE2Dg60QXFLg7KbNItJT2V7xYUQPfvMXpArxUHgIJDjBEH4ZYInu1gb9Nd3WBYhCYoKTAEqm1s00MpH",
  "gnshR2GoJGxTSH1qz5JbLACRKVvhVVtk7TYSpmAqvXWuWdQWoAjkMjXElkpJr5VPgGbv4qEsUKzve5v5MWKHuUVebCkx6wSMrVXRQC4UYFkonjrnWLe7Lhrf",
  "5Y+/Ppv2ZeoCwSY6hwahb+uL0LHFQCyvnXCXm625Y2Kqnm2hWVMJlYAJA+1+KqBSSjtCZvMI7JGIqISYOiSQjRuPwZFpt57QiLKfijfsnE6MdACTzBACl/gU",
  "orGJ1oj1qP4zfTrtsEDzibYRDaJF+/1SSR5EBe5jKVqiP2UEzZiFbRSn4YHLQRAM0dj+BLXqnZwNZKQXSJ09i9t0IhiiV9lmQk2VEhSCH0hDXFS2siVsQVKt",
  "xBGWikhur26Ahba0ao70aTm1YvyEC91sVQp9iYYLKa+LSCONA4KxaxtpDAMxKWwUVECI0xbIyEyiy+fDSNhKeUB2EjahzOPUcRU1l/ZWb3D9qcgnp1m7XW39",
  "oCROqiP3Sp91RzsdFc0d5kRhRTQB8KNUHs0Bsl2Rwg0oTppP8ihHuii5whG0Vd9ImT64HC8kJu1oKzLVX0dW3fL40G0xW77SIroudVcrUyrkmFDOytSEyYTl",
  "6h6M8JMEOkYzKKLybR6BkaN1EsH1vzXa2yMuA6xM7UkCsqbWoMFFzFQylIgBUcYI6FuOBsGUYpTLCkoCxWwlwFQfkkYBCFAESmSYxq1yw/s+EWeZFEzsHB8j",
  "hhKcOEhB5hmNiEPZ7cNxiras5Tqi6Za3PWejJGeJW/tMVRDbB7lyqGyZhRlIBTCrC6YUVQoW7te6yKLDYsJyZLBzkkiJoS+g7PWFUEl9OqrgNsnLxERV6MXT",
  "wNRXwcsVqCkDxmqLoELECmp9PcMDFfD0/gwicSX1s/bM7t4494jl4fmOgh5stbmTMPJIIiDQRTJnOkl0A3vMYXbRCdtQGHFgVCxw26noS2XyucnBMNuUFxoI",
  "bFq4eh5yzGMUTwFB7nhQ11/GGeLnIAwWvoCSuG6SFX1ALH7WYR6Yxmd1e3ZxvGVNuxOLieyBv2ZRMtCdFRxE+DyOAXVFfq8qMcZshJ0DAMXNYuabreauz0jM",
  "TtATSXyQAtYgqZr18fqzEneNZj6Pz0pUtW8305+SJ11m47eVyZgigitrJ/n2Tw3zVXAa4c+gELGG39O0+PuHtaAvHdjbaz5V3JyaaI+zZxnTWElbFObB0VP/",
  "BajP4qGhAEKQAoFmDelmCigfbDtnLO4ZyEH2rQAYWB2yQuM97CqSCTASwQCQgaitrVryzFGeWdFEz/MpDGGgmPYx3HjPSyZT/mHIkHbJayTbUykyUImTs0vE",
  "XULCmMKxUCg2mq40idqiSMflZl/Rrq8F58ft533se3/71D1eYgkihpRlMaq4EhuswZoy8l2qjwEzxlQ9JEN7z+6mzwpBptMP6reNUqKVEqscBmzYCZme5Sfr",
  "G1gEYXiHXymFWGKX2J26n+eyrAeEaus+QIMsLJn81PCbN4/rYbP9zHmQJCpWV6m+cKwMGMVb+kf3pb8mg8Z2nSASsABie7S7MxUvfvaUsdkShNxC2vF+H2ox",
  "P37/YRqiFHEqpNASCtQzaBQ4pID6T07ApZ6rVJu1MWiGLCtPlgJoaFA3RKrstorw2ZSGSMBFfbiQ5J5eMAK0FFQck7BRqY7I56LoXW5t8bIQAIiXiFwmcdq1",
  "qIXQPbiIqbJVt7E0VriFQsVF48gUV1FCWCMG6SkZkRAsnwmtA6gZhSznHioER5izgtPWd0MBxRVlrgnaAcKoCAtMTUFfSfyAUyIibMCYPISWSmetWIboMCaI",
  "s+HEzzeREQGJRyuRa9ZwqNUUItgui/FdcYrfgGcs+sc57K1bKuP9EFDqhoYizSYMmIurVBHCpn2zA6rL+UIS5zjozfY1CUoDRKRsF2dUNVmL+RIPXRWHpn0B",
  "UiCYCoAqdGXyP/NQ4ZIQpCqQpxSArJkciKuKdH/V87appYlTrOI3MSfe23VnZ2EWDvopf5A4D8qFSotcIhvVEnpverD3AcRInMmD4lfq3Dm5AnC9E9PMTobT",
  "TUThxrNYL/YOVLd2akRyAgcKXJE2V4fJgeqss0U/82Th4RYKMOIOAF7mi1+KdonlflTazJ4t5tkkURJWcosk+Y/L1DGjZH9K6c3Gkjem3sLW0dZ/Pi0X7dp6",
  "D9YlZT8bJP4yUeaBRGscGITQ18oc20QggRAYBCVHx7RmwxAAjqwA8rbuCZmGGCEE4eL7R0WfZEvU5mvEDPR5mLgBjgDTTQGl0AEzXM8B4ID1U7KUeEvy+vjE",
  "BRkXkcKhJyTognQFMYC/9nY6rjy5fSsFBiFTLgHgNJZtJkTsKqa2ZkUl3EtCytm2ud7s7SJYlhgpuHYtBMxRmd9F4tj6AaGPDdgXOL3j0oipej9tkgayBEmk",
  "vxmcXYTEBAEKrh0mpMmDKwg/YfAIT1ikzdQmZbpDelHwAlVfJaAqkdEyFaIe7c8+EmexrEIL/pBd/UVqL8ym3sdeX9ciA/VM6nbApNdc3tx9MMvM8Qe7SqBn",
  "M3BQLeC42YRrgh7KutIDxwEnS0hTJd4C8HlMInVzaT/66ctMxenCUjHpyUV7qyomVpsIzAcmoyjf9VzS+xxQ5QDsRW9nMa6x+OjEDqAJBe7ivFrbAKiDb0hg",
  "7hob+JERhoa+K0j13XzWLuqzmaN+BFArDCXpmn4CIx+lR0vexkAiVh3KgNT0PEcSKIhkypcEFFH1z3hrpC0CGaMciZ6ymEJheT4RnondWRnw6uw5g/Y2AMcC",
  "rFNZVoLKct+3QFquts2UW5tUkh92YyqaWFY57QpsZdWMIDORglgmt0C62igYAS+/uNiqgCXnfLeCUISKJJ2OdHJA68CfEF7YbbLtOVNYmO76sCJziFcis90j",
  "pAgFIxoEQAtnnolPCE4tRsXaCkrZVj/P+thW40vUyPXjM43OJ8xjPqoawfNcq5wyD0V1FXZheq0KnuJGI/NGBQCkC7dqg6/+oNaldCgKN9h1Iqi/zCsvKgou",
  "Ft2UKyi1lvxYxjq4i6rdquyeuC5SW1m/v4GYsiYhWVF3a1z0sySXON9ZVWp75wxk4QecVytD73E8tK1nSmOSUCn1DSg7RNH6qn+2R1NarCByKzy0yGQFBPW2",
  "oQBeDZHRnntMMhtyqShjFPURiN7e0m0wZbB4QSIB4A4BGuiETA0Hg8KmMwDL2VqmlP2ayknBS2iIYRZFLcWvPbK/jOOkJ+F3r8+nQygIiKBNWkkZwdS3UczZ",
  "DSJX8NQQYaRRO1BETG3B8PvfqpO3gROtAREYlAqkKdTWP1uuMG70dXF0EIeYTcNNbhaISSnQPmu/iospSpCT4uEFa5tXwmWkji7AZQ7DmnMrwhJ4uzP0UmZV",
  "ff1kFfiEHKV5u5bATXoNVopATY1LSGt1oYXA6JZJyfX+GEtQQGCpBfPcCmiY08Wz9HYItqCJSFZQhRUKbYmAQwmFFEZXYRKtUj1cSaCn24HPUtVJWXKl+q7y",
  "uQ4+qufHkgn6NOXqGAgfk4ctVlGQAcO6mRH8e4HP/gSVxcdgeXu/THnxqTxgp8Bw2DVtkwS/f1AIwgpQM+0tBdXtKsq+FXweNQHTUZ65szsT8v2uK3VI43CL",
  "kqCuCpNv7cUGBpTeKugOkPmJFTMX3zg/E6bXm8/I5Zoge7hJAASt9K077a9McqX1DfMJ6j/tV1xFTLTMglwQuKiYjlNRNhUGu9skF8BA7umwobinGqpdHHQx",
  "KQvQGQWBFB+sGcn0Mgo2YVbEAi4AFuMi2WPhhBwQRVf2iVnTzIr6HBzT6gkYkn0r36cxkdZ6u8KqM0BYMZuEGMSlDrGFTIk9Bz8PE+ttIpIKBBCzpkICRJBy",
  "JSQqUsItVDGs/xQ3YqVMQsMgcaO2HYhCAWYaQChBgrP1ThsORtbqilZN5z0gFgumTFYal4TCZ+hnOlEe8CtbbJKsEEzbpJz6pd1UuPExmC1YJF0UNoSbOFHw",
  "vLpUgumY0RKYX+1dHuOqFkpoppFQXNQ+ny6DB4AqeZYp7XawSI3QccSKWJsEEqQplhdhqoxXpQxUK/Jm0AQvaR604XxC3Kxnl+a3Wsx44TIKNwzq21xts+kA",
  "utwsrkUxlJDPfPjjQDa3UFMLun4X1sy6VnIUhEYwoGfW1JrBcjYijVrb4VoKzZib4GAJCU9BHjd8SqibEzbLpBIVpSahDTPLXnw/nrOYLDCVPFAGtQbAcP2J",
  "6j0or4psp6yzQvUDEKtSkJ97oFQDLTHQwnivpF4AxMFT5Ndt9t2lWqWzLRjc3lvLoj+XoHqh5dR+3Rmu9GG2md0Lg7agoJC+pRqB4Hcc1JK91ququ9FQVYkP",
  "AU5BXDeLC9lNZEkEhVEIcLbTqo1nSRemZK0PEYub64MaMc+hbp/zkdwAkOUcz0AsFvCVShVp0TAvxAlpTd+S1/wIWDgC0lmI9WtwXgTO2b3YK6tWxgdDn+8z",
  "ZRDZ2GDYK0HzSyT97WGWjjbkD/Y8suWfmnSqbFexuxfLAHeLd/ONiCxNXHXGX+crlTnnw1SyN5iFKGBX52J7YTQowSvvZ5MWyuYF6pAUEn7koQyujUUqv5Ud",
  "EPI3TvajWpAABGEN9qACVD4Bxw+0Kqwz9AHct7eNAOAsUtmVpFrWf9wfUbf0e7tiiOxNOQqF1fJ9i/r7pKc+hTjgLqVKWLtr0SGO/XVfk4LTaGBBnwiX3wBS",
  "rulXpSuARCmM1lxqyNuxvzL4bkJAIaTdIjSC0Pe52UiyHgbMYHofceNw9FZ6/u0mCgSePdE7WTLknteKUHXdYXrxjPRL0bgP2XAN4tV9WHAPzhTCuPYkKMkp",
  "rq6IQI+/6D1RI1mUCAJbRJUh/PtBwNBc3d9qF/iAXwKRd0p0iMhE67u0ECG5PrMIZNCnznBl4wBOytMdhJvK9kPRDJHG+X6fC6KMRYW9QS52vZ++jVPkbGZ5",
  "AuRxr0GY84OAsK9RBBLb0M9x9TB99MFS13Tz4kjZBNO9MUvewtU3lQbOsYyh1GtGIPPJ3dXGARn8KCxL9jcaqzx4RXn4Pu0tBy6FEsPuFvHqL+z6AiLMd1L4",
  "YLei0+ubninpsy7i9FNkwjC3fhgzp8c4WaNg1n7qur/m8x2XB8jwQ2a/cJxbo95w0dtFhig4IuiQBY8adAxnSZ71XiPFsEQ7+2B/a84c4NIY9xSiCWgsH5ek",
  "y+3781s8Q/QHXtGXlTneSVUhZeHr8ChEHxrPYlBJ/Rc4AG7pQ5Jl47dMzntKR2cKSuqelFCXW8hqO0tJbFQqBjd4thc0g5aGciyiTIPWq0KVPsUKaWhPlg63",
  "XPAhKs+eJTWIRCiulRZJJbWqOcjtt846gUPgmVQoLGhiZGnOd7O5vysERmCg0I/3Ldg2nS3MtoEtiELoMhf9ehaY0n0YM0Mn2DPJawAQUNO8xdR/3HFQCdJc",
  "svJeimiNwNUNImpruRTTFj/P6/hAdlj7PstyXBK5MiqvMSoKgsdZWWLF59MwEayctN7/EZl5vEkKJHrLIXC2kjQ30kJ7POpXZ5nGFjP8Vqlpl0xCKE9fyUOW",
  "EG2/U7GISqVDCgqhVEVsAyqHnbaffMoJt2lqiz55Z5M1yo+lLjGmBTdQOpJYQlzeOHgbyefscGhstYSFnRU+xjD7Iy7+eAB/CVvoQrhTTJABUBMEqSQJnhUF",
  "xbqY6WVFxLNVZSRQOUldHEXEO1iSHZFOacMvhr3nsnkBxzgfwainfxP258BaFtUF1bKD5tUGVoQ9Xcd9QcS04d62c4HvYc5OVptVUg2j62vghcZKurxAOl+f",
  "vknyVMStoFz/uZ0n4BIKawEwyTsPDYVXxfYJy3XClHuoeIXUT6axTg/YRK0gYUqdiiIQ9qIspQx24bu0IIo1SvK8g0dNRQkjlDVEdeqGAuxnl9CihinQD8Kt",
  "QIaBYVgGyhHs0MrWRO2vsaRPw1rEXR8T22bbb+t4CuCSR9Zof9wEAUIfg5L2NaIs4vgtS/Gh2xuUIyLM3uhwwxFNpihj9ahdzQ2lG6/W8I/1t0AUEaq5k8PM",
  "CTdcj2Gfzbw6PuxWzc/HRiTvN35DDp2LFbt6L02/OpgijUAX4Hu2xMh6PqrLsO+zfQu4IBiRna9CKVL95mEZWd0F5ae+gc3p4FCzjLU45X4iLL7oAzx+7+us",
  "Oz+gKRbFbDos+G7VOHOpoiBJBfUR0LnYrn9WDGUmrJxihCRpLOOewJQr6UERG5p5LpzGFhKU8go+YRT2a3cs3tCVYgOsAwTedbV/eTdZFmL90v3RnnI5eu/Z",
  "WrD82h9dFEsyRbaRY8RlYOleKjh3C/WzmYIoHxqPC4yxXHwBYA3M10GzMM/g3F5GXNOVXo6wYFjrd/QrbnFTQhBhAdg0piHhXO2NETBcnIkhb50mC6GlEHxc",
  "PUeGiaSOWaorJtloNTn9vkDUzr3i7ChV4AWHmHtlUjxmXGVAfc0skd8H/UCzJ5xtzKyDK/D2FhnVZrOD0pAp7AiFG1m1lwXlH4+pfaIObRBgDweBWiLHoKbr",
  "Qc/e+ECzkhXNuvuogqvUFaMjHPgdX6R9eYrYkdLEFhzICvdni4UalCu9IBNCWly9wgO5ja3v6WiGXcUPP2XM++uRwePxCZMdtPSskJLMz1ZcZBWmxWKM/g0s",
  "aaZr1Vl/bb1eTm6nkAoCtGVYg3fmr0S5OHuzfhSNipDIRYLinAjIfDeedj7mwl4szMFy13FwOSoiC9TuXX4H0mcIrWys4L43udXIMt6rjkc+zM1oAOnIXKay",
  "XQY5B9vYisEP6xI9jfrsAfipWw3vKWAIZUv/0ynyamtq8N0ynbL8+PevbPjj/v5VTGUP3Bd5JgRf51WWbfO7M1HX5UffJJPzOYteAjgLsA0i+Nq4ehlyKqH9",
  "YyEGy9VXYmJqe8Etfy1l8vL7RP96AfUtU3/IiLxRZU0oqbh6hecbrNTvNeU0Urexy4h4HMjWwYXQ6chnP505yBZW4b+FNa/dPvWpHtJR3OCGbjNMXUoLCxyd",
  "7w55j5GDK/+99f21pv78Pmv3rULqOqVpazv7XGmYSoSlBpTb2TMMtY3XlAYiUAJ0xvnyKlq2K6PPY12erSXci0gxecVKcmzLkVIwDS3xV2IcMZRd+OMCp8fS",
  "1qg4xxlut3M8ZaTdE7rvQQ1C+OywIWeBH//4dYkV3/m4OzbN/3FV9yRwT21xZNbCj7GRDH5+7OeIo0iAVyiAl0LkvwIhZgpmf/SntZBZljHC802ZQQQ0s4FS",
  "Q2VpovIKU89P/DZYHxPA+f1rTeGWAsq1zHTcK8HklOeZtkbQ+mzdCjXtba2JlCzrb1auPyZeRfXvFn7+BCaMM3OAV8VoRJ+DVbi90qWPBu+EdGWmRuavMZSs",
  "aX3SdQXLQfHfFAa1hdHBVUym/dpMI7Eup5Zk4h+/f4VMpu7DD4/x1+bXf4j6iNH8tY73z2NZYXw2QI8CBBA/rwtiviYEGVI/vy6559Pg9LK8HS4gmLUIhfRk",
  "e8/OSZmmAbT3jBRk24gA6zbK7imn7K//jv7zLSOEliTnr3qf/wj9eQZnQgHBQPtjLHILeX4vjoBt96Tco5Vuh6vtoaLAwn7tVuKvRfhvfN6DuCwEDhs2X20p",
  "qlosymlzVLmltUBAl//A7+cPWTSHna38Fe0/E5+fROn2aJvfrUye2DK1RAGY0iqqb4iJtDgelg1hD1ZLmjIqn69PRMACdKHz/cOLyvL5ecz0p29p+nZnjVox",
  "+/e4/U/Hxbj0ES247t8Df1oLq640FeT51G5HEVLrdxwG5RhzPqW4fx4irAkq/vq95MUz8yDUMPy3e1b7/N7bYTjnnWvcrQqQ9LA+RfEWrVyw7ZBI/83wD0p6",
  "BV4BQPC3yp/pHtMrV0JgKpRwRZMMbzFAf85C4Pcf3dp9BvXLBve+A5uIm3KZ89q/NcJQFv180hvJFrnY3gJkLa09yd9h/nwf07DAVcgV6b/h/qlP8LZc21zo",
  "09QIWx98AaMa6wyx5Q4uqy/m2Md19yz79n0cgk67hOfDxf4AEnjqrgq7qcPk5rnoFXA/GGeirwZUFPhX1j8tKlupVNpL1J+S/8q1az3dZFCfcyRfN8UKcIJA",
  "B4IBuofjcvq1IM8CRCZiUGWu1CaxuDX5UhV8/DqzwoLNnBTB94ozwnX+iWlcvJkzmDfwT/9J8Dc1mO1RtncItCbYcOrH3mQMxtwL6SejwgUa6ChdefpqD9Iy",
  "gs9a+XxRwLhdoPwc7dQyuYkSVACjS43CyB7zHVPxn2TprsLvFlZf28GfXP1VsO80qn6Tn/VBCclq6focBPpp5kvEph1iy8zTpLhVBXVgqsFi6AunteaHcTyT",
  "Rkm+hU34TqfpVJPM/OvnDwDzwaVlCbpVTjX/RGAOzvVHWpX4ubfNjsCkURU18dHRsibe3NBdgTOVUYiMsu0jPNBiV6LkcJRKPnyCqgGxZ9s/w9oEty6E+NFk",
  "P/ob/PFaUOqnfryGubMs/TnLPHMqkW9HX7OIkaOiKkG9rUWNZpsGA5l8spyjcqIlS87UIMhpP7qaE+0KYtH+mHrMLwl4nfG1ny0S/zofoK6/dMK7x0S4ixqe",
  "P8Zf6ftsGiNhZp+vBxsUvugeNBRDPbvgoVR7enE3y5TZZkgmuBrA1Nltx2Z/bUO7+LpGHLmqvTAbCIWGSG9tS1X/SmkRxn46UTj1uYnBP8nfd54ZNO3rbJs5",
  "CTAnsBQsq/3xyNplUwTwbRifADQqNrLFWpGMPgAeewgUEpGn1+H+5AItxJru8zkC8Oer+0flQIu6Z1jsHxWYBcFLTXHj9pkMHuzOp6DOCEl9JLXvOoS4XiVC",
  "B5tpYbUXjeQLEA7Xg907CUvGVihEP7Jwu+gODN4Birw7PyqE/zQxwzbXTuLDV1KKL0F04INW7C0VFrgz+gAUuo9WbpzImskSVHW9YhBZKNJTNVwLCLiAirlM",
  "hIIZXDyvc1ONwezid/+r+VM8rJ8fK/sIuskm16E++5/kr1hGWQ3NuUrhJyhq8LtYNrlv8Vo8YLhRGyWkuvxkGORwUfaOPhsh05KZWLEYg74bNne3y6Ukvyla",
  "6qF+/+kUVMU0qHQVS7Y6G8+f5W/IymLLAR88x7E2zoP5mvXC97VkAzTdTjlwNBovctdCdJuQ+81mAOUO3NS9CMGOohR4rc+hWvhRVGc/jg5e01XA5FMFkayf",
  "bKyCmpHpsxs/gQfwwdjoX77aAgFbXfplrLwTXZ/X7JFl41Jdtfuc1NEukMaHKlnSO0DrfPITJH5O2c4UcOpv/Cf5uTQsLb8FY5lfPxXa15wQNf0/caaWbJQs",
  "zdPdcF6zRTwxrL5UGIdVmMHEgHvM3EAbkZwHAn35FMzZMXB9SpV7rm7X+c7fxnQN7OrrVdCH/XwTwYb8E/+DUItOqvTzaJrEFqG4TUUFhzd0nDNcbI4/XuXN",
  "tLwyBmb5R+hgniDxQLpPKgSuzyjWHFyh8gXETS8qT7ZW/ZP33K+NboQGF01Prxhqtb5NBiZ+TOGaBQYIOZEhwkI6At33a2pIEEwMn8Xr+8wIjR1Gu/KmQDwG",
  "ylQ5bveVVbbSd4kn/GMERTCRNHLgxhN9jrWwMrqtGxP+0tT47ElqKlAMEoiL05te7fNRZnR+Fg0Rlz7w67+iguYx/Kqbn3h3w2NqcTsofFkzd8HfobI3Std3",
  "V/NrTjbswUYAxS1tgWWjqImdDPb7qGBCJNjPJMcp5NmbMqjPqotLaHPUaHkYfvQ0knoKZsyihQDM8PY+EflBWmstzQ6/pVaTKSj+fCAFZ7BBLXi6kiN5nkJu",
  "7QcENiz6AraLWrJTVjrJzpUOH3w/JrNJSpn9obgKqvgDLmGy6sdWSQOjWPU1XPJ3XPCrvnJqAari/S5/eAf3jciCtKli3am7XPB1OgdF8kdPoeC8Xs3tqg+T",
  "vKH34kddA6KdUKYTFDY6zp7mfCMJeC7blZ2oJtHv1NRT2dXZTu+IdfFOH723wibQtWWUANVFkUpHQxRvmli9R/5vMxCcZRqY9LBDneDbsWpAsdS1CL/uAFxp",
  "u+ojdcR4P2fhaaUy60+bXpLA4ps9cHTHYKFqv0iEqKyrWL72d0nIn/JfI6y0s8zNT3D4rV8J5c+HNqnURf1oDmqvji612cayfInde9VmBjiRGwYritgdFQdN",
  "dHY18TuCOTRrHvIjD+R6OGu5xPwcqFae9eXYZD5FGmnobUS7teQG8ID86CMxBf9RnLXO1GaQx5wM6BtJr9iRMY4O926DYUqrGCIodc3Fek8X2EVjyrWNUouf",
  "Hq9R8mhzwb/GHzYwVnh+f8vF1gM1V7pd4Bs6bPj7my00Jj69jbpoo5Tp/oF1f1R5TMtVppeAbNxUB2c8q6hPx54GqdTuysKprXt1uPIajeImQ0/TZ38phex5",
  "2SAVE3J8ktTzhluwrk/zAypO+tYy+UY/ORAfWSsJNf4CP1nxsSKJrmYh2ve67MNKZ4b6fAz2Ehwjow/nN4Uc4sBAqXYatv2GTjkiMhBcHz9VlvzaCam+dNJl",
  "7c9EOZboXoWXquVdIMkBPcqzy1sxK1ncJ624ONtVWs+mBNRyv7xn9ZWbtyRhvxkI41n1LSyOAH4fenkGrHVauap8WBFVUkNrmlG9KiZci8ErDpJSXJ4t7Kvd",
  "mft1Z53hFPyRYr8gFKZYgbtFgy+hBNvdGbZIsMrZLOMS+xBdtn9gbXpm0TU7PT7d+S0M0Dzkt88KGn9dzgUtVpU8bpMLlvlBsQaaxpSyPMydwQqDfLRRTkMB",
  "EGM3CW8T3M1rmCtEad7Bb28GXzvPquL82JjArmsJfl6D6PUVIFTQlvYLnaQTZCGkPioS7Fr1qr25dZdSlDUpxHx2PhNtduD45ENU1EZQE/ZGNUtogiKa9Vt9",
  "LrKp76XgKfBAPIA651Y0y88AiO4n+XG+mcKj6TReReaG6ELjonbf2H/MrVnKq/mm6zD9dArPTYDfg4tsvrx6HIZ+2qJBxr1kiv4jz+/BTkDRHVR81QJSlHvI",
  "p2hD0vlggM/iymZiJA+xKY6IFjlDh2Z+UlDvgQDmsEb1NPIxeTbsIiRRPzarv0bjBK1NEIeJnsT0wB91E+A0C1AL+zMkjjL6pvNd9b2UzFUHd9rcfBAK9WaH",
  "hSGcb56COvciwaJwju4Rq28vF7yWT1QaP1hvlO3jRQDzUyUV7eKNQTI/cSolEk4mPWBK8pa7gC3q9wvStqa7kD45Re52pP1wwl2EE9kVpOBQdpNMrwa4lfIk",
  "RTJgEQuc3Yxc+PO7Y2y9Ga8LUOV1l1R/lz/jcAyoR/u+QYVyrTfh4yaDr1ZwlOw7bdlOZ3bHj7gmgI30R2bWoyZXe2AG5BUmlfp0Tbxev0Ql8ejvpBDJs2WI",
  "GWurCuSKTZa0wc9jTp8iR2B7xx3spppxc5O817agmBkHGA4Uf/HUwWtsh7Rk4v7y7lCLk5M53/ESQyHOYjnQLW7NjfYRgt6UBf6QeJfG27cHUZXCbEHpiZIK",
  "txbTu9zAHw8hXry5gos3N6lKjAJFRGt/4i30vfUqsjQYUpZMP9w6lEpig2X9iZFomdwK80Hg+wYRc+rOX3//GUpdXz/lL8/0rUhMThEEfjVERU1FeIkxWo67",
  "Cuou4VzeRNuRKrA8cM8ybKOJz6SWIs983SR9eFmnbpt19UXzP8rfX3B3ytjNiFgliP5h/3BqbhIMwm8ykzoD86a46fplG/RdK/X6l99m/2NGzhY+Tm0FEssK",
  "S9TSlhzGFkV5Te0Qk/HAkHlgEi4tUWqaEgV64v1N6FuTq2nkrougPpG+fqIMivOByZut1D86689qGm/Q37ai/YKCHGP1apkLeNHVY+J+vuDox/3Qdcs4nFV+",
  "epBSxN2okX+NfeicHDk2lTqtf/Uxvy1IQFHhfvrH8vu34BYs6Gfs8mPhwNToYZbbk0zDSKh02VsBgdzm7SojC36EWceo4c/uegZGZ0W/D8Gf4O+9ZRcUoJwE",
  "G4C/sTP/t636eDEkq0rBc/OlO9/0MMYvgRbC6ws8fGqOEc31y3hhfnJy48ERE+63qPtwaUkUoS/xc35gy17KKvNLqiVggtz8Kfdv7SousmlqgJ35K9WfDZ1K",
  "OokFFr5JmBGarjoJklTrot4DxnJMCsw+UrYBAodOrWvY44t0Sk8eScxsU0kGbv6juNDzmi69etCYXjjfSCGI22s+KP4BdbrDXRDoLOsGp9DRj0yqRqK2zlq/",
  "uExWxTmthj7YQTGlnLP1z4B6lQCvZPbCCDZ6h4FAZesqxUyxLk0WQP4v/r/4//wvwXnDVqIi+x/gf4I3mjRaSDHLFQYBaVcSsidl+Ve/HJONWlBLZYvL0Kzk",
  "wajfkhxMBGsB4AuaArBLKP4BETXyFPK//n/+v//nwjv5JUuXnLYpef82f+ZYGRrNZJUHG+ot2pYoW9ruUa3Y7mUYjR4sDGIYFESAMMQKdJgr9pjcNWuLtQjY",
  "ZidMq19Yx5S+Tlz2rT/Ef1f7mwEoE+jiXwP/5FvFoll4BOMgpfIbwKszATSuk9pXOUTA+PZQ752kpSif9/l6Ov6qkB02jMGH2TEPIKnVIiaBqpYPdqL8bQB4",
  "WMHmh/eZKnr4d78wDdvRsRdn+7OMvSp6rJ49WniaexaxG5JPv6Lo6j7VIvY9n8h/A5kEnLRJ92gJ6jI9bdH1/QzeCFvc+yJYDAb4V8/UH8ssk0H+Rss/W5EL",
  "yCBCi4oxXysTvO3zUeSUlVrIoTgM0ANSH72FPrZffdNcoVbmy3dkJk3MGTd0z4jmPkNXllQt/FeFf7IdM1PpjdKBrv670p8uy9Y2RyaxX1cjBcDrzwkkWyvo",
  "I2jyI9uc+lCa836w2dduqCn+Gy3BgNDCz/TWd8vIGZpMQBgQULfBDApLaFkJ8Tem3X9A/pYgoj8EIRdlgpaBno42nDJSMlyE01vetm7VihhytZQuK0lFvDw7",
  "dfk10df/7+mrZNl++XPugucsSZPAiJjG52z3z/pb+M+sKbzJ40bQ9t8Ff/oCraglXkBOtIwuC+l3kPt6IlL3yJ+uNyy85eh1z2PV3gJSa/7b9yNSQrqxAqcY",
  "zT3i/fFdMLSqQTuqcX8/xgt3SHr0170jKbr4Q8fxoTvfBfj5fH3EZQX9j+Ke4Fwk0kobEfq0e4i2a3VVGHTES+EK00zvlvj74T6a/ll6v33DIPz2aUsS+4R7",
  "dRYw/0b1+eOT+dJr2UflX63mn+3WvweUwc9UMGebny+bRphavn4p1z237edTQ9WnuZrHeMfQhfo0yQ//h6JraSA5xEe9fV33EQY9gJh9ttZASMQNen6MprNt",
  "n4/0N4n+LIvKnrzFx1BpXALolc8HYNAjhDBB4bIS1ghbVmqMXvsAcqoGq/uVtc7WKBF9PtuuW245cWOrf1bI0GW92IXp1T7/HQp/oika4PJv0/NPILxq5v2j",
  "b1q1IeeN26EGtbJC0u7hQUbGPvdoLPecS5x1CrVcwKL430suR3VlBPvADJAKP00GAmJNwXohMl5ocT46HkbZ6o+E26HR5ufoNpPsE0af6nFvm4tf4wZZAC0X",
  "soWM2C5PLVJ4uVR0f5pmtO9gp1dbZJa6h0ngMojifbFz3HRSU1O6NP33NfuYIbiqW38KszbPTRTxtiOOWFNLGeTPLyt8//VCXfS+LKHrx6xLmXgvZb6DAvL/",
  "HpiIX3iicybqa25Jq5Vd7A9+cY5WEVyb51v6fCHIlkmnTRBbGx+axOcLizTst55FrU+yX9+Fq16+oIszUQSgstT0gnO41Mrex7LWrvaxxgK56BeJsHhRAS86",
  "mAAMBLWv2t3GP9g1AJn8Ezjn05uic7Zuf45/xSZWNYT5LG9ZU1Pc15njdIKzW5zaxtYFQ5xPoXGfy38XvyRXKEAi19ai7nndom4vGRcBcIX37/eLCUAeb71B",
  "0MI9IaY025WNUrm95XRCozjSrRx8zkqT1C0y3A5N7tfcRuGbZxl39CmAMYpJZ8vhIqWYoBue4kqfZ7UCg74oTuGeRZE/Hydfu43JMwFBsz/SssLAOTekJnjs",
  "50p2CN5T389EUOBpN196TfRRL7fz0hCf/dW3KOF68nLvFOqjDSZ3d1YV/NYO6CSoN6YJCemvD0B7WbZ7PHuwfRzzARZ9Gup1qC+vdn+g7k/Bfv15gutFcOzi",
  "Zx7U/YTrsO7bZ4clL/C9+hBSHwfKBzUf1k1Wh3xnizSJS29Bmr1ywFt1wbjeF3Y/hVGswFCMGqHLwBW9xoTHLvMhrjbNTiw33l8crbBxlbWKtQGoZyhusXec",
  "PP24j8GClOp/3AKsV5nRpy8sRnsL9U0U/UNMv5RRF8a8W0Cy5kVOfJMufWA1R6xtYPji0HD3UNmf+VCNj7yA0tr2g7I+OBks7kXoufnxygoFnomL8cLL1tYC",
  "2LwYUgi8K/tk3izx4eUJ5LoJB/VOiIzez36iaie6SO71Y+DFRqwvMUgTbxxQx/wM6j/DazzBkpXWYkltc858mm0hg30Wh+tzz+cEdYF2TlgYiSe0l37lEHOU",
  "nvSbuC/gaPfJoQHJDPAEu0/CHLnIiosr5QBstkCJ7w2epZ5FCOa8in394kNvY9tCsLosaoFFztT0FtBJKl3vxfjiQ6Bww7gQVpYquGDxTTqLl+itQsmpSsiQ",
  "pIj98V2J4hwMRwUBo+o2c7j4xK/Wlju2XD9rwwOhemYb59OQgeJEnNrhmostqsoqPqjSiFWZYvaroo+7B7Oj7GrJms+kg3rb/cW17RZOYnzne4hPbGy0wMPv",
  "EFAqeT11b2ZuK6lLGxesoq0lvs7lPVuOJnVAfyiyQeM7I3TEQaXAK8XjA+szP16YsR4VlDEalQhvbLfvfPFTpobCOPv1RtKVsWuVIWGSgOpWD4ifXwiWiN9Q",
  "5WeLs41uoTxfUUPnBjRQC9Z+v0Lywm747T1LK5Zw3KTPBYZ5ch30fAk0vzq2pIWSdHuPnbIo6GNhxVurlLxFQzahfd5QW4VnAAaf87HQhqgNuA6wCzCqaj7T",
  "JHg2wFf07wNGrX7GkkRs1siwP/VZXzkOccl/7AXb/e5gKN9ADIzBa9kycy5qHY7F1rMr6oMCPllD0EtN3ZTjTxYN6xYjfHLGrVDFgKqkqJmKo+8sazyVdgPn",
  "6eS8WLQyWJc8lfx8513ayvLBz4OVVYMu8cHXjckfeQsGVjAalYHOvOj7EyTN/SVCrZykaH14cTmfLCB9elDfxmS/+llsKkPEwYCbmYMwv/0gS3InMg8PNLaX",
  "T8FvbReePPqkFs7R52wiRmXayGEBglPUMQG/xjg60glnAJT1GxBBZOv9TcCAO+51fTm9aJyKa34JsBHIMl/Ibr1fO9rNH/0pPFJwVrC3Ksju+hZr822iFdGW",
  "U/PSPmli6yzo+PuLeek/wB7sFuQ8FVbxE0CUvkX6wHfKRb9E5oShVFQ+9HzISWkBdn1sXnZXExXED0TBx3ohlUqINhbaewxTN1cPylC4tbUyoi7Wru+mmFF8",
  "5+r4Yhf0viOhitXcjj9yHzojic4dbJo27ZjfCA2pk6qpka+QzXXfGPiqIHE1ssGWygJ/Fj/IQW9/aKIFiN5zWebj7bbAGF+3GzPd/Lx8zhNbealwD4XKfjmU",
  "hmk0K1rILpgE7Um4CLoqwWtb+imGRv2XmRRfzJ5q+Z7PK9InlOUyMiQd4E1Ev6aHRrlMJvtwc2ar3pBNpcpMc2nu65S6wIZbk0InjRhcdHob9aKfQJeCRelW",
  "OudSrNWGodYqAngyPNmKCrSprVqd38HEMl6mhhYufXK42UhwSJzFfiUvarMb99xySC6YROVbqH2XwyijF+TPPE4vNkBdakEqKDD6+HA/pQLbCxeMsJOzn6oN",
  "SaBJQaK6OlatwzIWOVh2L5pbsr8IMEsM480hrLBe5F2/GF1i+WK7SaYQ0Vm0HWt+Bk/HtZ7cOQ2+OUJ+KLyBTFPOWfrD9sGlt/FpYl22HsJVEZU9cr7UnTwd",
  "07fSBMQSSnePydcCb4iRw42JMA8LJ4rDk77dF/UoSGPrtRib6PaPW+n5uqnhqr8b4Yqqx5ue8PNklGGZ98ypDH3mbch5q2jKNFO7cgaFeWSgP7HiCo3PwWyl",
  "/DC6EuF7Kv9CCZH6L8sOAxQrmEDcLva6Mc4B8TUkPFVlzBc/BZRToUgo1oplfV0WNrntQnzsqYj76VhmBXax6a3h9w992NYCz2xz5bY81W9yEF+f50PuCkZx",
  "3iw9YZ+k7pmz/Dd9ayMa+PGPnQhtU5mvT/0qJXR51oVJW655vOciBZcVOoUagFtGAYHpBx+5QPD6GRmVfV9TMZj6S0zBtREBbHPo6L+2Fl2fWrCtKAPVaKnv",
  "80u1xBs9ArfkBFr/uHV5sgQQ1iyexLXpRHQC4iUnAansM+9x2aMyllBNUi+Db0uDNFYvUDaE3zuf0ZyANipbdArLf8cFMc+QsNzxqq7R+do3yu7jnJ1682vU",
  "KouIOT9FvNswIOQ9RhOtiE1tf/pdVZQzcN++T42Vf14I3nO7BkF9qnwfI53t/8MbTvzxnVpZuwecHxcAt7S6Bd1nkeTHN924R2uWv79k9OxZqjwyhJAfft2i",
  "0bMC67v7W3RI+uvDgPw8BqdXplKX7u/uVbZgAv0RsRCI+nztsOZVIkow+O8uK4rRC0wRefbWHJuhyBVoM+2gIrvvGRDCC/pNyuJypXdQovma23h3lSg1781D",
  "8gr1818WaIvDvo0EKOhz1qgALFzu/7FGCwVtR6YrzsmSKPOmhYT3iUu7OpsUPeKvLvTSQk+9crA2UU9qGfW6gOmt8HPA27AraVN2agQZVN5n2dK3cmD0p/Fm",
  "ma9UDhFTJP8No4R1fbDEohCgzO0pbkE3Hb1CjRBmZTf2zTB2fT9XUCBMagSm8gvpX0vMwZYPfy+C+IsQ23a5lrcq6Xtmm34+qn33KWX5X3Uio4acmo7mTH96",
  "z6Lu1+8/bm9+m0/z+yigNuTOE8I4zpTJbdBJG6+k3rsFkrsVQPr+Gi6rPkLcZkD3uBPtj2/0iP39xjfrPgHDWJVlXwWvmWf5P8LnVuTPs0e3cGXkxxiQWcOI",
  "3D1wKimfIYcvel4v89vs4Z75ui7kxycwCj5Lh8JAzyTwX8pB5/vZsy5Ln+Z0wHkrj4ezPS9u3f+nd3WXO5uVQr0cc8rR8k2IVbZyZjsYbalv05z5stPWfC10",
  "2d+lYL++RQSgrNv5nLrP93kvOZmgQT/6/Aq3vmj/q4N3nZUEvHnh8N2IsjLDf5fQSW/RebMHXOa5Eu+D7cmcz3nP67p1G3Hb1TsUr2prigF97svUej5at+Aa",
  "ESP3CvsvV5kfF0pF/H7WtF5iFewylemk0jeFK/3vFYPaQsxV3bNtaTFKKC36Fz4eNb9WXVUczkl0q6I5g+f7ZYvu+9R8OaD5OYoBZJ/Uvu075HeMfp+tpc90",
  "hl9ebQXLd6adRNMQss+3xH8L0Nu19H3g7cYmmnq/Axh6UWGIPs24VoPG/NhgoH5Z0ukht1KTAmG+u5U0hUQI/+Vm+z1RK0YPK6kL1U3bkokFFGirRnPs/4pM",
  "jPPCvRwU9yWM7/EShIMyrQi6FfjrZxGOFJ9rWekt3GcEGom7FnBvzyu1Px8A4gY1B6NoUdyo4jO8Cs6H/TlYGYwCou6J3ykI//uCNmgDQA3EYa24YkrfIPBr",
  "1OV5vg/nzJnAz74K2mrO52sbq+86H/EW0t8PePvN8F7Sf3mmZzoy8Niu27eoSY4SrIBwa/o9HsApn2j/dwd5j7M5K1sI748NALgc+Y9uAldtUJfsj4sMUg5j",
  "9L783P6kWLuULiiLWQm3TEb3fMiv+yaQsYholDlyLauGltYk9fn62XZr0YFu8X8gKpgfn7B/bWwBtbqn4mktqCFrEw6lTL+B760EZ4Ia7ZfuCu5lng2Nznex",
  "huyp5C8CzG9e4N2laag+Z3vf4PR+vSwL0yiHIN/NYNr/5qXzWwCEASsueLoGCPcJB1pCPm/aZ6UP5UJS8zUrtzlv/btVv6BgNb/2FpYHPMEWP1//16KNnj9T",
  "rfstztdfvEQo15BWtK/xcbkV/tsEIkbzxcTxuSWHrkRW4o6msO00PoX0bge157LW0H0uz0j4nOV99hhDbom682C//vmnAHDzuK4rhCmf+1ytEO5LDV/Ima+R",
  "NhWabznx3+zL5dueY5N7PgAL3rYshAwHpOlznw/fiLhCheHChTKsIKghCX7OK2BmaxqwXF7/Q5T2hwVs/WnZfdHTmTNNTF2Widree1Y+azD8d07cL2p6a9rg",
  "+7kXc1vzVo/OftHy/pjUlIlF5WXVbZ71k9t6O/vVbUiXNayR/9v7ZNWTFGGijFiw2XNu7XN1H5hyfz/3bU1k9xxzU/5v4t5fVpO+NEkNRb9Vpg+/CxCNqK+l",
  "nnsSwnxxZD2ClnAZx1hqzCecdo6JYXrzdxn9qVwY6q97558q/D6W+e6RfUWC4FmXV9ivAUD+O8bpgTjvIrOk+Xm7W7pesEFNqJNbSx+aU34h7Pj6PtOo7zO9",
  "KcOidQ/4/cOIQf5zan9RxCpArBispfcAwncnQsR5fE/wBvp+P9Jaci/+a8JOr8JpXfSerJKc6VG4jantRJY1NfRvHz9Z8cOuC6iWLi/Rn+cq2y9LUzdPHMj4",
  "W/IPSVTZ+4B/N6k/Jrn1MkURsOZMUguCqBhIWP8JknIKv2QUQC8UMSJ+cYX0WoGBdyknfS5yViEJonl7jtsWepU8AJ6LutX3X2qFCGk/H72BwxCco6KZPOk5",
  "birImzzpMGkaFa6I/+F/Q1d9fgxPuM30KlEIuIIy8toTb3shKvVCWifquF2JYaDNeTbFyrJn6p12t4O/Fv64cLVMfgz1H/wH/4/6f/2vjFpUspUom5CbXlY8",
  "WISMKjTMJQh0O7yc1yEJFskDAOa1BtcAPLhdX989JX5n5G/er9HtQi19coPxg+/KX/yfs00UVvP87GBgm0d5PgkkMn691W+QUZtGAuZFohYv+X/hUznLCtQJ",
  "OoOyjdYWFnnhmyyksa+lcxOWysGnpLVNLlRXb2uX3/G1jDO85N99/Yd/YCA2oO8mPv6PcyAOGjiMAGRBP3UVhpwADIQaEm+WEl5qDw7pPV4b10Zqg6eXblAE",
  "VMYefu0t8ske6LObjW3xiovGFf2X0ekOCRFzTMgGaHN/o/wiOlEPbG+MZfeEs8UylOi2uX+5b7bqk9jLT/ozOIWLnWwqJ68kSpze0uXSnsNx88z+PIWa1dtO",
  "gaPlk1He7c3465mn691OlP5tZ+rhn9+/LdSxz3JZoB6iZ7sO6D7vZSh9GxcJIm+iEd5w2VhdeSfpVet9M9Mherdh303ny3cDQQ1KGn0Ga7y+4n8p7bfH/jVD",
  "jPfdZQJyPnuBUlLBZwnXa/JfRlU0yitbSeX+pfJOTrfdYOuL8Nu+ofrNImKbrJ/ob6NNVn9P1+AKP4xC8won8646CtvCtigF/Sfv+qX96p3vYnfi5K+Cu5xR",
  "w5DA/vjLr/9tH6R6NeeR35b5ea0wmL0uq/k9FoNLyAvYwcaJ8YbfGESs5ju3XqzUT3WXfMrmZxGDnclGV6l9NR5vU9Uvieogx1PZljCCFjE+eUTJ2rH8L1Ca",
  "qej3VjxSFaIKf+G+QsHYfDPp5n2acvEuq3pjWE6VPqngl1FSXtt79Q/1h5aWtZy06aId/fnr+es+4jYF+OdTVzOjmmcdf6BO1M679EbiayCq7wLyJWWJr10X",
  "T6NZBxFQe9grOruUB5dgv5ur/XFkfNB/uT3nPNFA6Tb2dednPy9s18ma5wMhB+D3wkqhhtRXzc1COXyC/EWox56vd9EXZu3gC2XS38F+qGufH4pH9fnsR2wg",
  "F9/vzkLWjIV3tyjfdShqoIfhZ0ymZOfsXAjHYP6+zszkrjbeCVNWazy5pZdGIbjEQtYJbbEDPDF5AakRCZ31c9/ZxdL5lg7Y77Mrdxb+6CEvvsCFxb+oIu7c",
  "GRVDY/VUi0M0f6bm8t3hLE+zT1mVwiaq91I56bHtBOFfcpfF75MEpsLW2MJqFOPRrYfzPUViD9k7+4XSkVHEGD9E8aytspunG4b6H+YPrIJ8QxTS/UxhkX9a",
  "mAGJ4NK33z7oMxRFMFlCN6xwEL1IbKXX3iFvenxzJTH5TXcaWwW4qpsXg7xLSiN2v+BXyDZqgX/+uf6Uij9opG7YewebtYPiCJsUmBFRvqlmBw8cduLrZcQq",
  "uNnIvyDMdECRi2be/d66jW5mmz6KrNcUgKf2BvstIS4QUzCtLgoTffIdAdcpanu7s2c1WmNAGmuI5pwDVKe8ULpTC2jVB1Qvb4U4+5oRARSbYhVSMjtzW/M/",
  "4VlLs87bcpR5ex6MF8Zg6Li2pMcu/EW+Kk+Yrzw92H4xXDaL+FyBFrCQzWg8ycAmdhRM6bRKKtUAdkz8BegfdDPTPATA635XYiy/O+tBXdSDCVG3nqoITrKL",
  "Xl2DeG977cpIpgHbt1aT9LxjbzuIHSu2udPWRgUkd36tvtUdRjnB5NByLcWJcby7ppCqCcEhnp1CGVgB8OyQXN7bOipxC8v8Ij4Co1fTjL+/r3+gXHBOU8zw",
  "6+FNvYth6EYRDX5FG7oTLAK6bOYWWQm/d0L8NG6hPp9rMJ9j+/sdVPZl2sDhDjXXuzP7rkg7OuAr1XoZmZ8+GGldIeqlJz7uFdCu/VKFZ4GRVAVPbtF5vq9K",
  "ebk3Zm8LU/EzhI6rwkdrF3tRG03RDjH5lKB/ZEWOR6e0eRg+AwCXh6+S5g83xL+UUBTSPu+sYXJqMwaLv14NZTc4qmwNtabb76KXX0QeffAymotH9c9j9hzj",
  "4THrosyc50MwpjRW3t2EyZS7qqlzju67xJcGUkS07bsP3GjZLyrmzDPJaPm9SaoJgne0u2rqE9T9oS1nqamYn0Q831Xf4lusL3YYaPPkHrEXdHWxOsX9ig+i",
  "S3kAhIDJfPu5XhKa24fT89/2yPfbYM527y2Hs/X5Eki/EGHHwMobK6p7g/pUgFGTYXn1m4DeTGqa+RfoebK1lTP3EE3ZZy4Iwb/ZL84iilDYoOb+vNHrwFwX",
  "ch2vNPD93LItt97R+oj4cumPbHq/t5vdX6juIfwOQjtRlno+RL8KpdpH14E8+qQo4HisZEmJ3tvIXdQH8il38Qa9b8iXeDjF6vWGazMQdcWzFX/ga0KI5R+L",
  "IJLwm3/ovKYN2xyZR0MR6MI6tYk/P2PMnuP5WpwqQp+6BlbC8LV+PU9Ib0C95mOwO8jQNypw9eun4t/zOFzdPL+lbYKfVGBD9mr2W1BH5cVigxcx3p/qz6On",
  "EeyFlt+ryMvpDLePCf0QJjFa3LWoGmt4KZbzHM9cr7eZLXXJ3rGzHn9RKRTB//NnQjIEctANZaQv1c0mgnCnJszxGl00yTLg3INBBOgLKmlrT//05tLev5CG",
  "hubdWA/Wx7XvAm/oNUPyXBi1xkm1XgYe1ZU038XgcahwIwE4Lx2nAZSRIyafG082HjI8hBPi1s+ZT07LRE+BLwjiWs18w6+hpRHFFohxWrEKVQEwxXrLbRf3",
  "JjrFVqP18KKYvSD28PW+TDTngrTKi4mkc73g4nrx+ko36DeuXJBV764515J7ULtVqpvTnTvi0iiuImPrDJJCNzAyAX6E6uHRTuzFqr49wxfMf5HqVIbUHYj5",
  "A/7+NLCdcRHLc4RGkQ+fsxSRRbHA7Q8KY345/GFtawdU1us+Ko6ak97ogFxnL/WVYOAsQF6K0L6uXt8Bs0H2ruuKLeGfK+H/n6d/27m1i5azsKpqrb9j/otc",
  "SA4gkEgkcB+JvTYGi00A2bBslOQyEgEiKIeA18Y2Sm4iAWxQFBRwbiTC/xxv760qB32unE/p++YY37vprVU9D5Fr7Ao5+NSoPC7hG260TokM6Rn2lRrOWHNA",
  "fGH+HPwQyiMiyXzm7IP/4Deom5eSXvLjU6T3zG2qBuGnFTqpxcGjVoaijpruhybNl0Vh8WCOb4w/ANBR4ZtUDP0D/o07VxuhwwnCaliZ4+SsfKhkakppncOr",
  "dL9qk7NBsA0wmMNQnBx10Il4ftUZJyQeFLnSMwb+z0XE7V4iv5vGU6/F5Hl+MuhqhPCEtlqaEdw3ybAaeyTqKX89dzSDVOlplTU5Vz18ZcUnI8ZqLJUh5Pgg",
  "+pk+mUf8qTkoDkblXeMuweg65zRC4cNz/m+J1gDyDIJRadXJCTT7eIyzU8DjZnxQsYBT+9UjvRk4uClQXBTxJusAMqU5abKGTyVJ+6dO94N6sSUqGtc444NM",
  "5hyDcDLhXnTNu7Uzg9fPWWVrJb1Kebhtiz19PLWSudyCOe8hoabkeiR4IJP/RzeKrzw28XAVPdrag6Fu3tfjquHRHhfQZKNQ36xMvpwtcUAfA9b4j73DGUF7",
  "qr2xjHPefzh/jIyoLvLub4P9M41ONz1mLZ2k1lIV1OjquyZTbUQUkh5UqX0w96lw9udozt7vxeSZenCEGx+srNPnyAAfqmREpJ8Br+5oEvzE2JFGPU9x3vpe",
  "9wcrbYZVqyKUT6D5GYSwLx8wxy3XvhWItn/UOmsG2FjONcGMTA5bRnmjh7tlYGoibft+9UYg/yvr7yHbCheZ5tmv+h+CJUo0KsFUeY8WzUck4/XYFrCODwGM",
  "MUw3hUZU9UwRORRss5/1TUv6sYKpD5Yejc6ZnL0zYVcmg//otiKABIg5vsKWRmV5n1LOyuOjY4BrjlSUY2LCsFxMCMICSaJxNOY0OP8xgKkNgBU1RnUSbiXo",
  "CTv1eiQKPx8hyk6dwLVPOagS5xHn5gmhVrjrz1Tw8PueqFmav7D/ZAJNacYx8ebpnM8DOJPqbMKCvs+FQyThnATRVtUJs0+eBrfCswEWufHd0+3TV/tQ9aC7",
  "xDr/NIRKL/Gs99B+5ySPOiHeMTZ39ZohfvX5hPGZnIoBT7Xw8mcBXizraOtWnY8i1T0G+W6p8zjxKOcgmwJJgD106UFuWnzPFKVqPJM66RUCEUvPmQiI3fwT",
  "zF/+fbgtkV8D+Yfsv4EZm6fi0tA/nvcrvcl74uhyg+vfkYWzbLCSeqYO9EtwqWnw1Dx+JqU9KGDXJxeaBJi3qbgjB01A9R+tBAIhtokr2jAqkrFIoFH+kr+a",
  "8Dc/xClhU/vHlCG5MPeIS6Rm/QRqh5Pyv8xzRGoq/f285OetJ5XKVDAdKZzP74/KqOIAmjgVl9O+Zj8XSblg7an8c//8/9v/w//wz/bRu4zn7/8TzV9jeLu/",
  "HQrkEXpX2iB7B0yf5j+2uYxB89S1Q2XQQ2EYTuW2d+sEMiHzrwIFqk26eWqjpqdgi//xgDy5ps6s+y9jN1IeeI1bdGQdXmxC0etb2st14LKAFAwa82TEJLxK",
  "xA7xb3cH+xmFCF2/9hCwtLnyPtYhO669XlqqSS7hpwy+JZq1C5l1QyKdYP7BYIWwK6f1h+D+jBB/fn+Syw2g2We97DdVeEtwE81fjo/xH/x/f5vMg05bv//A",
  "1sNzGkxeFcgoaw9N97vmKFJOsTk6slXWCRo1ut6jWwU9aZ8qw6qwz7pGsw5dI3H8xsrLt8GhEe20W8jJLNBhcRcQJJ+37u6z5qxT7lGG6pOXeH+sgftohq6t",
  "smvqWy3//hQZP8IRIEK5qanEXPyj+rPpcz4m9YfN79MwprxriPiJ6665Pj9P+WJYUvx/npBT48IszF0JjBKOGKU91C5rL876PjGE++5F6KyvmFnh8Cydzv+p",
  "TbTfIuUQ7pmCwTJ0nsNDf7ax9o8zYu1KCpz21Hm2uDtom3A+W8aaHDVmP2YdQvk79opdRPgWCK/jJzlFTxFCZtm9y71FcJ45jRkJNdmL8TP9RsuTNpDCkLh3",
  "Bjht9Pxijph1h4RTjFPYjzMFGVkvNfaE1lO+SaGjDcWZAkFNkBEOfljwkygxBFyz3dvipZFzxcvnIwE75VtJnvlSRkNMjg+hfqar/Rx2yE6QU9ow8l3Bgvn7",
  "DEz95BjvgM8YHwegOv4PVWPDHvBD8dSZZKY5VUrt47Xx7BrtHiTZwxk8lIdWuZ6zp5KZqjMVZdqH1dTeTlmdklKgM2+f2GF8rhUxXdFc5Y08/NjpeXEwbXQe",
  "uPpZYsXnDQnlM9NneUyX05wsVjy6QftTAhGrXvDRUNIcd9TrgvQ9p5aAIVN+cjNS3JZjfbNdyUo20P6DJqIYqiTdh8esweacwRkDKJDcc6+lT00H7gPeUzCy",
  "i3XE0hIgMMTFTC1WzqoXT5EA9aaA3RrkTtKuPw+jrO9Yz45UgA+hlca86LcEoCCKm+Ck2RSq52Twni+oWcWuY0WzYL/KiNHKVIZWlJc82xLaQQZr1x7O1KkC",
  "WH3UB3blx7kRqSD8nffQtOm3ulVc6M0M12T4vmJZbUbR6wPJ7sjkR81GZERvWdzPaKqynE35hWY4uLC37fnea7GuPrxqEMyok+P2RlH78sOBfbH8VfhyGpgH",
  "9PdC8jeU8qH3w8uQ5zkfSUQVrrQkh1MghKYNzGSxFp3kuJX1mTo+wZTsaag4XJhkmEj/UWjfUKDBg7zreDG1Ob2fE3HA05hZQFSrY8/s8ftR5lpEoEs07dF0",
  "hOfM+NdA/kucoKKs2yd8EDrf9+jpoSuB6sntQ9dD7XIFB4NOhcROTTUFTnc2qwrIhYgd0/qOOxjBXFAv0zo/oEaE1qnZmzfedZlu43gtseW69AOJc+tihqf4",
  "OVJCH4wWFeS6tn8GXbvao11tm2tQeXAvcBq+wUwAp4IeEZs4z5KA9iQTpcU62Bh5H5c+bm/OmPJoPuujNls6Gv0nTjr4PR92Uuig/+ARThqFRWBGspPFnzNr",
  "+OaUOO9lla7cOzKZE1U27MJwRoVK5okKXEc+u+y90NEbl2nupYP1YzrcBenxGMXPvEjenjldxDuHQtA0uJysMhecNIqHGrgMVThcnoEhqHA85TAckjbuMi7p",
  "nUbV1mFMffbsWvbhI8I1hQJZml6N4YZRqCqg+mTvgy29xqHwywddecvp4yn99LdqNEmdDEMKPTqpwitJK0w4qZGzUJjPqfz6/dzlWiNli16sssld6OAofQ6I",
  "Ln1Zm3VieX942LY81EdDo1lTX6ERmwV8r1eDHs3xlk/S3PU6OfKJNh8lEcVGz8HrGvpo17doqVgAcgB+GP3ED9Zy6+Jb3JswxZjB+EZQ6O5BGc7WxtF5hBqL",
  "rKof8bSo8SBFcpp9Zk3P/JaGB7NCjH3WtOFe2Bo7WLp6QY43uDshnsDL785puEy969hkn2ObXZxKKlNEMUemcPcFRTJarfld/d236KSDiwTqdDWKBhE/SCHN",
  "AjFBh5SSNRm39h22FlCf6eKHz7RYxrWbpNhnpzf9IkfYBRu91TqbxSW7XU4XzjmznVdUah4QZ4aQOtsVoXQ8o5p+MVTObPYx5I2Zx9DOIACstB6f/uxylV8k",
  "tXbo4rmOunwFHKidg+9U6ZlVcf1ELXmDxBxOsnPNw49daF8OMKLvyQf5/hB3WMzdlT6zn6Enr2QU3qnO8uQdQ7eEJd7Fx9mKujxYhz/rBU7F2k4N7YWp4VTp",
  "ULzigo7D3tgZVF4ZrJjUty7Ou3V9vTKZBxJLzirznNxRy1F+tPNdUgUtoISn8SGlsC6EIvhdeM9Sj546OtkfnI7SrAApz/15cDWCHLwTvl0a1KOU2ao8GQwW",
  "tIUJsHdOvqRIbkTD3zuvpzNNe/cdA7zF7dkQj3mkVHHhuL534cSdujysVPN0rbcBnU0XOuUEk8A7I5h+hgfA+NeVLwl8IeTyaQ2CYyBuGFXcQXwwxzLtrFQf",
  "IQvbWfPb+L2VR+k9k3dbZEOel9RkIQTn9P7JdqE8PRPER0K5OvKZSzmvN4jCQwGCzvi0FOJdJUCRiOZROGs/KjH+0DQeq1oBSV3fXaxmqu6RxBW7fPvXeH7Q",
  "QYVCN9TK1Gj+A3Jm7AUufDEUwuLiM/h6pbdYYCqVHQ8XHRWTOJZr84iU0/fuu6fLYv/qS4qkMwxwWA9/zTsyBPa3KrcLG7fFx1tacD9QFfiD8SDCG6oVmuGd",
  "tcs8TvE8JqNT3GO8BwVmLm+FCKdj9zRR1MjnKKzDWo2LoLfAn/wMk6DIPOCAkfKF+/XRyXFmn8gmIAxfu+vLCFx/xa/ZXkWnTrM8U/0bKNKe0cUVH/6W+YUk",
  "qBJizmNvkGzEM7ocVfIkv9Hexrj4axCl75uYXaPJA+CMrvPF+JoZ1zk/MzbO7GQOagGphSBH4SmeXLDO08HA5JnzsFnkLHUQ4MT+7adH8Dljz0jHtrvVdagk",
  "uyLm2pr6ogxs9Cxn4VdcWXFBQPrkvnPWNTVMjzI6NRZDAvUSyveBsThQ0vi97TVW4RVCyNiITk1Cmsr6vZQsr/RRUvDzXXWB2n3AepvLHK8ZGYVqTyxcjIDu",
  "r2kBVQPgc7g8hUsQzm3SRfOXnZz6GxXuRUzRqFM8yGfnx/j3NnoPLXs+k3Wmz2/DWBoGifFgP96FnuqdU4Uek+hXPbhybMl8SZ81y+HpqZH8y410miv30ZsR",
  "nT4jazo5co1bhTDl8OD59nPInxJ3pNH6TmNcG8M+FTF1GnKj3h4zvR/txmHuA3M/ZB/VoF503D/rQGBjhEH6nA8xlz/fCRMcNbQfBhaAaHr+UvcY8xf7T/rC",
  "CHINwlVzBHPt6dm8oAxuaZdgpDYLCNnRvnl1nmZ2isM+cNv7M1Ou08iqw7OOqd3eEpcszPuYN8Jc0KvPe2071KCH0QGpXaeCqZ4a6BRfCbTqFgZOz4tWOPcZ",
  "1HVyfsws7WV4jUj6M7Nm19rcj4Efh4+TUx5ki6eBvB2+a8jy1ueI4M2Rgr6dTk5tA2vLTNX3H0T+E438Fz/+C/41pSvTp4+Ice2VuIPwBI8JTb0NgpKp3dOZ",
  "oqv5InLV3xpFqRBEuvEuT1JWAAfkrnvt5skNb4fU/fiALlcxWzZh+h+HBbHDGqqJY2ogEWRtRteiAHY4dKE4OGC5f6aUuS1HUgQSs3d+1CRGqDktcupfLCOZ",
  "sC+lf0WgDDV5HpuZ9hWWmpVTtCxI9l9i/dE/Cwb4F/6n/73/+382tS+IlZkn0KBNIuo1rGOBi6fJMTDl8hU0zeHF3x3ORZ0OiXlrvRLXt6e5IYafWxONfIq7",
  "qC7lPW17MuaccEkxpKfJky827IfOnlWcUoaFc54rZkxAbR1uwGeoRY12d3xW2tDsYCiXkgc/f2qkBQs1AyLNRXJpFV1cPINxOvgycku8f0IlrBxU6pY/x3+J",
  "P/prCo8S8w9Z7FCjvLT6HZPxAiMcCF8+iN/R+94hNtv6xJ4tPt4ZCCijZ84zDT+eNjBPuLPi4hGD4JGJC054Z/SMU6kKIgQ0S/D4b5Psxyw46JRxIS18zyaZ",
  "YqHDZgQaHJOZzZQ1oxQD57gCnqNzEVPED2arvohu8fCEC2A2MN4RLVBPdKwYrzuzlB27aPWEFuE/158EV2lZIv8Efw9Q6CwRM6Sr7dFC8N4361UUyvxlnaiE",
  "H0bT3yqWBZBcKL7+PvWFcKn/JF7CJ4Ghnsv3+p/wzCpm5HIGwPkri+LcwuSJoXvAPROg54CYz6rSuV40jk5NFh9o4bAL2LOSjEZb0fVMQqvqqIkQuuyShiNg",
  "HZ2SabAvwFjB3uhUEhWJnpjJDOlvkcAofqfzk70UH/RkBSrBCaLH42xaPzeG/ewmCofDtcjmrD3K9lYuVHiOlBr7O2Ke5/eI8qCLErOKxCfzJLNFA+d/3JRx",
  "ee0tRPocCZaJXuLqjlMvwqni9MxCDlZH2RQfeKD9w+0v4BjSwK/4+yrUq+mSENmjr3aEy3GC5g4GiwcITjwd8swn6aUNAzyPQZybRB/UIuYMnsMchP9X/QmT",
  "bnxRi5X6m+fPlR7Lryg8JUtUZwQdDmYOIx5lIww2mksOGdybj/3LP7zqrARRT078hhH3ysQuNYea1R+Z3sdLFS8Q7pzBV4ExCBXzLJD27yhDW4rnnTt1+Zkq",
  "ijspcQCkB0lpFT3Rz4c2DsSm21zBqGDLPORkhxi+T910LA23Zg4UUbf7XoOxLxKzVsfHGBz6FB6W9mnLONEpvAqo+gRntikenjWobDsuQaWTK1xjnh1ha+0C",
  "xXkpRcU38RwFNVAy7npadOoYKGPgnp+VeEoprTdw+/jgpPL9gTyY7vE0z+BwlgoMX/igaOawiJ5kUAS3bFAzEh7t3O6nvmbtHzO26wfrSxby0uHFeD2+oPFh",
  "wTmz7uS8io8DHJRLkpk14dbeeEiy8Aw4NUEWkC/CnHTW3l32F1fMO61przoQ6q37lFSPa2vuStQVEIP4acrEVmmaAIvJRLVgn437u2orbaLWiSBEk3353K1F",
  "FlH7Ug9fGEcM4TpnETG5gOGCwCH3umNqo6Codj0IDhq+n5E6WMPucH5PADi7pkm2/NLIIdrAlLw40NwH2C6lOnmCUA2zPPvpsFKDx2XyUucFyYt6zoF5jA7t",
  "1PIuOKQjSCg2rIJGdFmpfBC1RI5Y41xZTvA5tt8zD8ihm6qro97VBoxiWANnH+QRvoba8TYCrjCxWxJSK81QB3keYArF7xeBAWweZgNn8Pb77foJd80OeQFS",
  "RziID5c4XAGo+tjxuQE7/PaJDozYkU70083/P0IY47dC6yxzJcVkoTIsubJf9EhUJvx2GFbmcEk6Tuv0D5+K+8ZirULClJLg93OUnPdb+AxPsdSTpGbQhx/e",
  "byB4mbgAhNkLHmxcjpKigBRg7zNesEUTr3jiq1N2SHSZ77vQ4D79yQJxGxZkVHLPR3mJFavRxkM9Qt42hoiQRJhZ8xOu1caclP23kAbOLsn4AIsar/fFKeAX",
  "zNXhywG9OaFeaCZMPsToFwBmL0ZlQaBAKSRwHJxwTrZ4MIcQ65uE6HJyIM0Jt+yt/UtMnDSgggfPETLG1qVPR2jx0GfpqxKfL1bjoZZq942Hzx9gqvG3zJaX",
  "cLhdVxi0Q/bQ4FFVyVUFq9lfUMj+FYbHvgROvSgpJ1VUkkQt1YxSe00d41RS2jz4MfTkdJ9eWrp6nclw6nG9Nwf+5ukd80/mvzhFfUOffIL9ZyRUCTHkcdkz",
  "PSi1Yle02Eps/5a7aSOlJxqdqBWob7gHHWondMVygGoJPhWAocmw3+8PZzzrvFfNc0djQbHOSAdMvqyAnwHqTKRT6BoFRu2tUjI48MaoHAVMp9AELS3zQ7TJ",
  "PQ3ba/nYZ6vR/u0wTGueZn2EOoD6eox85t0pzFClNVuCRCt9+KIocNcx02TndNfhHxmHsuuARKd6CKOGj8EzQg4BTZXHkDWZJZZKr/qK+QjoNc4KSdfhfKS8",
  "+Jnlfb9URTNezfmkaIk8zhg+OM4bBkUUmzwZ5/2B2ijYnfsyRoLSzKUtlHRKYQmqWDW3OesNbhKZkG9HdwrNJ/RMvpSLPzXlSlIYWHNWyHJD4mzynUG8Ok8w",
  "5/sEO4TG1J+z2HonjT1/0ZkrwkR+CzOhz3WyVGYFrCGkKIGNHmJUmFNnMBi00EelkVKaDsH9FH83KD/iQ9LgHk13plK7LSJxj2pWoAYqgM725r9LNyqpt/nU",
  "1LWncF3yEmOfzQor+XHgYEt5yNMWWZKsxpxlAvIdI7Qy7YD1KPw7ecjvTMfZLEwpxJmg1lK1nt9qveyTzJfSesmih8QfYf7+VbNiu/+C/pNfzF344MHYycBw",
  "6LkgfFy9gCPABVIzDmrZOofCcFwI9XVtvd2cSOccdTIof1NsngJMW2OQrNzA5wjKU5ITrhpqc5Nkce93CuHo0qoQbKc+VXrRp9sInWXnK9eWzvYYNFKALOZ0",
  "qlMb4Liah+fL1KCq86b4w7oSXkK/We/dWu49yxJmNcPRNLz4cvX/uvOXf6FpCfjP1/wrUPosn0Xj8Gmkf7CtbAXlQugyTE2Gg0IPUkloaWlazo/Z5Z7POQBe",
  "ie5vJ8MrCmlP/+waaGXKfTThtK+3jDkTHRZ8UmUXKMSbfdZM1XcNzzqfpBL2eZXoTq8FLIfTgnw1Vr4ZmLM4wi9JHmtzau1ds0ZCTF/GrDl1qd0Bz65vIzlk",
  "Ctwf+EkOkbMOi1naoz/8y+DPMGSdNX8ig9AmNmugKZJvrAOCp3TA/ePk7s1l6WefqZKRrLNbrn+DxumRE/lQ5GQdAR2USNx+yU0g9ZAyCSWVBKOzSPx6WSp2",
  "+V/6R9rVFsikd+s858PR5uWBc1SctaFLW03uc+qXEURRMqrvc63fCr3LUnDBkvpTgdCZSmPWMecZFFEQzRQvHhKA+Wr0EJP+RTMu/HP/wv9n1JXhH/4LB79E",
  "6ehZd+ZI1+AzPwBBm5/M7USl7q0ZFGq7A0N10FPFJzp0iz8OUqga5dyJw66pQ6+UO2LpjGhZdLAO0QlHxbcIa0Ms9LUjzImeuHYlP3bL6CQKwPbipg7BNTqA",
  "OSQGTRPnGRdaL5P5gzdEDad0dinOQMKzNWFvCLW5VWNmPr//9qosYNaRzh8czDnN25k1R+/y/0aRGfnAkg8D7XpFRadyOu+a0QDrTIqlr8rYXbMb2m1+3oW5",
  "nD1qZjIf/LaNFJY9v2e2XEnOh7FUQZZFMmtlLM4gdZ9sCONv2RBEH48P5pvox2ImVM+vuOvp8VT2nvg8bVHz5kCpFJEqmeA6OjTOB7Nq83lgud7tqpzA9Dmp",
  "WRNWkWmubDFek7MIVBV3B8/Z0fyYC0ty5njB4K8jzA+w86MDR8wMsv0unqyhIkYdFeMnlO5Q+h05zJPbC2X9b2cJroNpCnUJ2yxdjmJBkG9Yh+EoYd/XztIU",
  "eaCQNfJyXBTyL/83RaE5tMzTCDmmg5UpTk+nEr0aV9CygvSgLTsVkeeZArJAZ9xR07UFKP+71DJh6tQd8tWpDBPUiLi22GmXFZHKLLADN3DZd2AhBLcgY0S9",
  "7OtuFk21cQmoxkRHowo3UCg3FMSHel5KI6x5D8564AF2OmRlyA3DmHhIZjv2WYFqi+eq8GLLhrPtMrq3qDYHB8ekTtRQMtV+5FjmE978Vrv6MqZ+YZneR+ym",
  "M3k8g3jHsmp8vm9tobAF9qZKyfY1VqPC6x+r/BAN1Tf5bGUGg3DveU/keQJOwNpnTDV5es/RgQ7VQlWsOCFY0aQVsnHNVx7UkWN19WzpjOrfYqqmQPXLumuY",
  "U+SyKALUVwl7igEJHJ6HTKAaTeOWD3+MCJct+n/138SFqbrdIxA0jhA6Cg17ZU3Ey1EeFRmXA7nfBRIQ09fQ0OOqx+Ry7fWnYOAETQF1WVJQvMDS9oESV58i",
  "R2EzlOYHMs2wUr0bMetctVXVj5PPhEMr0HqlqUCn3HQdYQbDOCBD9xQu1k1RhKNrFttn4bURVG/7y/BQnNNiKI9VCLHQr80GBvwMTiqrTM8w1EUG1JsHm7K6",
  "KzLrIy4tA1zVCA+ZoIegAJybCXtrP4a/FNm+V8yk32M4R1aISkG0N/iBh0oQBOC7qxZTpXqxD0q6q4yqM6mJMDzDCYusLtoI38qOihaCE+GQh8OZnTpPws5K",
  "P80UBtfdrlROoPq3FLp0aiiho0EAggxqAGpN0fMsnIQZlzjLuhLNWlO0ZVDFXWCa//J/5TUJ0Dyc6BIVNTglnE2CHpHSKQTSALzMSdQA/hwloanD6pp2gGLw",
  "429NCgfEj2GAzX4BXEaLQY6u6VJ0uWjALuPqi3sCLEl2anuNAXK0hcYs+AJEruZNyFOZmtSVKeiFhkVKoJLTBEZ27DOVopLfT2AeQnQZXfe5l26/b0viipA6",
  "PqXhLm9OiqOYJ50EBgrsimwVVjzwVedwBqwzKyiEceIEr9BUCm9j082RNbdUo3NSVYAH8fDDoz6ZLwbggn+sSjCaGRBPQId7QsCRbVrc4KecgDM7Bsu9dlQP",
  "b/DDK9uocQ6Oih/dczzNxOGQ51NQnVAzB6xGGR+V4GrC8HY9An+ol4Jfp89D5iVC6UQb38ffhksZnd4gZbPBugq1IoR/rydUlgBuEax5y1YqI/26zE25JN1m",
  "UwCUXAnfQtOYRIKEPdulqMR/Gy/w8xRLLyFPzbsPC9nkejAuAkyrlZwZpVU4hR5QJp90slqG2Micw8sduHOpSkz+XAbOegUybWcQe/ty5/YdyhxmcTSeliC0",
  "egLh/PzqZKbbAx8mxdqDMIzxpJ7JL19SmLvZxdGA4+EhtkAQl4uQkuqQz5suqRzgM1jnxKNwWLwPufJlVhfkY1ZJSLbmLqR1Nv+0K1WtAviob9utHmryaV+m",
  "WQqsYx/WIlM+Dhb3GZwkP0VwjwuDIakn7ckF0DFjxnmCwOkzC7HIHz3u1GDk8KntUzWXtxgB48NzS1ZcS7kk6907xQZ7CkCK6jPcZLg7B861v6kC12Q/cKeV",
  "+VOHdYNTRkHC/Pho5mRlgsZbrLhiOBOf63M+QQN6OTXi5iThIptkFdEechChD5xdC1kMTX8JODMvpzycue8IdrVGG7VMqlA4fyXaCGNrNHwmWKAUXPHMYWlZ",
  "mleFINsschoKFw3dQbaawgkHzaMNBgeZwkODXqpLUnRQDJUdaQOvlMlvRsRZzJl0R0spHLyaVX+HJyJU4B5zQ/vnmRUREOwCujN4rQqxOPhJfCZvvH7jJ8Vq",
  "qNjnZM7mEPhTg8FRxtP8sOZo4n1vVsGCsMJh4UMDfS44+NNVdAmQdb8fMSjqQI3BT5mvFZeBSESsDacex0FyMIGRud1dkZjZkyM9PKwQINHX3rNHwuRYKi9y",
  "s3wgQIqvZw7BVEhjD9k6r97NYxSZOnvxWrtwvMJiJgVatFpmOdxscK0BK+/p+mRZXtJ7cogznDkDAs1OkX+XKDx+AIP0t+C2ThNJFFaSTKNI5lxOssc6g9gA",
  "iV2GoZbrwuPyBuJC3yrceaTCOdh6C3hm00/D+ITRw4RB540P9Bh+NOCCdZEXrwecaYr3tcjGm/3P8BDBmfABqR9AoTcFF3rwjJ8Gplcpb3hY86cPbH/3ulsN",
  "68AxfIS3hSrz3mhW+G0RPneGst++NHWxW8u42q3A56uDGR6gZ4KzZZwc8ur/zhipmcFw0xK6ggKWmTb2wC4v0QfukgwpQagcMFUC6FNUnxrEKocbhd1hMiTu",
  "bVszO2zs+rcRhN5tBk9Ye1kKM506FeSTw8eCiMJGk5MEEHwR0JkKQGnMg8cWc/gv/SPKi6bFCEtT7qhmN/2C0ARF151nT8FiOlByq4imjfJF6IJ/qhy1aqxn",
  "E1oDMGQy6kTQGmKqTLMlc3Ae3wx1iHKzk3KATugcLYbkmhAUCDOiwtv1KJsul0ERZbov7i0Uqp5z0UdymZ100zzT47MVkfcp1T/xAzuK0xn1JJ2ufq4EWqi/",
  "giZ70c+t8rR0/r02N+577XRcLNbhRRyJNSJ4+B0nPaboctC1kIZRkZFkF2eiv50UG+ek+SbKK90lwWpConFMLv9CVZyaoFCSXqtJrFEGV8ZqTPDwHGHm3Rjg",
  "l40hGeegmAaeSc4o0ImVvjnAa6U539KT+jcRzo/reINrYLEYnToyhqbqp+ZRUMcUlGwGeNOYizdkbQQmUIP69UiqH//c/0tgRciVWRcO9LWwTK6zRgwIZlYk",
  "pJ53cXSuDkMACYYVuPN3tT9nARVVrHONC2g/KdRxcGFTo7Eiu63nsHaeE1y5jibCjCCTWYDFFCs/vis5hVyD/OKlGiPS8z5JexR6hZw2hWu9BeD6113A1q9W",
  "S+6CiYcKRNZiCmSuMPFGhK0nOGvRKA1U9V3IU4moweIwUdv/0j++jkiEEmuDmrU4xSKwS0cMqaLG54kn85w7MVqwwTvpHvafwsvM1e8iKREaXr9fnDVRJ5qm",
  "Dst9JJiKrojZLi9CYCmaiBjfjoSBeaZ0XfeQ6+Rj3Z+k07/iGoVMbZXX5Hr7yFOpf1NWODQvAFTTnVR4VMw4z0s2BqlM3Twa5mS9GdK/5vD4Vba6uvuCrufq",
  "X/yvSkZNRZNNIYVNDgectHsGv1xlVaN9ofUR7aFAAXGpzp8SlcsvFlxXz3ua58aV7pbn/rVf689wHUDuu0iDqFvQE4xrtapEU7U/Ux7oyOVOH03JF3slTEPC",
  "3cmSILB2t/Ur7EQK1//edSfUyJNz5OXumBptjn+eAk8pC0l8ppRq3ccOYmcmmeaXPO8DGwK48XdjlGtTwaqA9pLLi1WPvaeXQV4sCa8dbCmvn8JhzTlYgf/9",
  "AJ5aFnyGY81AD2AflrLGz+epjeSufOdX0UIeX3AVOakD7JjtTHj4POrBqXf1AgjnwMUDIzG8GGwPpwttta1LtbxKiRmW6t8a4a9Wls1QmF+IPU5b0iFdaVAJ",
  "7afmieoC6tYhUxUuk1KmeIS08cuDk//lf0tDEeqXtAccEcHkXjJDINifqQE6n5i1f9tSCEKKK//uRQDmJMQqrFDUoPZTQ0eunmOhrVHTACUNGdb1eHnIiM1i",
  "BDKDks8ViT5f5UhJPrgGdZL9yoBUo0Nq6oVi5f1xKmgEXRuR2m4RlLpA3ucEzBgAsdusbhubv5K2e4DBJDyy4mm4yNjL/lHFb+XpkpeEf78aWsyZk8U7tgo0",
  "oSfzmW7TeWwv8uh3Aqkj/3ozTCr//q9Q/zRJ+Jx3gtGDt7NrdEDuKNsjChNS9pmlyUt4sAwN+dbPOc4Ah48zF6zDz1s4Klt9hJoKkqTZpLl5Ot7lBvQc1Lsm",
  "OHgSPwUdRAOmJhPnBtlgerW2X8G/KK0R9KYIsmnkZhIiAW8yV5u3+qcRp94Xwzkn509HyQ60kq9IwfRJIQi2fJYLsYJDSd/CgSuj6qpm4e/uksEvy/QQfKIT",
  "zEbRHVZlpQpZXZORighBnS189o3BmuWsA1JdE+n8uON3VV6A4oZCjhMGoc0ZPnIkdTRqYc7DrhcR6mVeR/xHR5SFaQ79SyZCkTjO49TcN8h38TRGCMKVDWI+",
  "h/61vKcjB/PP/N4KiC1Oj7lG2P+XfJuSp2z0tJ3npHeHZrSxrpCjQhyhTgrg1F7y35YMMO6zxmL01vcPzqloluPncJ15PH0g8KxBbxCawik3Z8yHGdbAbk7I",
  "tfuQeEupTHPgOlhz+TFh+cwT1GEknIjrZzvTiJAyw5heeFn/ehFHQA+wnwPgoTiEn7TLajlhfjmvSSbDMMRzwnJQaGxZBhowtoJB31COw9/+5//oo8IBDfQQ",
  "AQ2eZW9R9xwTEJikzjNDaxPFzN/xOo6OaTKgTOTjRoGYwiJ51AgmK+YzkQq3iaJDyaryABhNSVlZBA6ZFIUYNYgEnX5gVVA4VeeZ4BJ3eHRuXKUA5axf2LYJ",
  "i/9V1gaqJ+B5hoGC6f15P1vm3D2/27cadj+AcrBmVx+AbgMBOMgKyjAT8f2c55+uNXEb/yEaCcedW/AEL5rwqzROiRNX+uUd8rlc4//D6x9Hm1iHg4ffOp+3",
  "jBVPnTUM1sDovQa/moB+tnaHco8OOVlDWlM33zx1uCZrBzXrRO59SzSHpC1kbRq96zL7a1c609ufjcKw3wJYh1NM/etCt+n7iMHu2uuiEDcukzt131YeDdlv",
  "D/rgYliIeWrKeRK5qXSFNNMUWLOY60r8l/7r2DYVOsSgLFa4H1GOIgKfgTT0M9PHhb87aA/k2sXbLKi9gsouuY/A8qEYo+5E3CupKWpcUyddekYRqPQ0b6+t",
  "XTuPfjHcRpo29o2tlPty45gip12XETQsl4YL1ydyQNLmP46Lp411LBPnxyGHcUf7M8NK6OdbmT7qQ+HCBphdTVtHa+M5FmA8wyBMDUCM4s+Xnand/8kgzoJp",
  "uKPAeXJCJaxzmuRQU5mKS397uH5+sOnO4wOAzxu3iaDm+h4BpA/z+SouWefHSUbQVKYHxYN0LjwA7K2/GlU8ObIg+r2usrN+7dvw9x7wD8Mp4I7ljBru1tGs",
  "I4YpX4Qd/x9NeL3teCHD50ywsJtTjnLU74+vklb0ZQoJb0Vfx/7AhyCEaZzl2m0c6NeJHqfqaESjTv+HBiLo90+9JG6MEXcByLcNg4LZOf23Q1DaCD5fUDyi",
  "MZByLVSJ3h5VGMDzY7+fBJoyeQpu40jM3aidxtvizDIEGgeSa8qBkuf3Z8LOAPX3NCkdBflXMWUrn00a2b/iDkAS1hH34n+7ey63xeL0MPV+zvo+54bXrhYW",
  "sG7lXzplRuHRrKlot38+KuMyAVU0hnTdP37fhvJjGfwPAf7Vw4ywHPXbCTQ9NefHRs3y+d9/71DQpki8qgEVA6S+H40mtGD1kdcGeFZc82yvA9RZw1PM5TFT",
  "byeLHtLP2++zAeUKiEEgo/qWQPz56cN/RcGfI9N/RGD63KBM9OYz0ZDanQQA+Y+D1OmLiAVOabNkHLo6tlymm/QwlTDQed7csMn0Br12mTe2WoHONa6KQ9U2",
  "7gP05gxS/4EvD3ILwnnOmqECFMbNA/TfqqNQNGLVgK6anN7P1FnJdH2Xr6nx+xyx5nbXMISJ4OHP/HgFKTudG7ohT/XLHu1y72VNn5TmouYGYua/iP56AFQU",
  "/RnxRyMh5+GLTuYxj7JGr+Lq7+flP3LpSN+q3UjIQdGn0wl858ZZO02OvWKZmeXC+VxH5Jms3ikDOtM1Un3FSTPkXjuMfFVfMWX/J0e022m/v2GgkeOl0fDf",
  "HwY6qNRMBXVE8lX8sam3p6YBnkLAqWkTyEBnQWAQ3AtvnkHP6Cp0SYBBz51D+dlMxayMGzhPgrP+M/Uf9s/ldebZ0/yz/us8hVm+CkoOIu3W8XPAKPyv7uAE",
  "dB+w9iIC2H1A1q9MTXHqXcmR+q2wnHB9C0hSgD8+9F2LAlukn997Hh6ErLO2rKi+ndha+PZ//H1CzwoCTcHQ3zleyLSfbwV0mzhXEYo7GY5mfSsUkJ7DPmGf",
  "KKEXLHOzCEMj96ByGjfSMxCPO1hnf/jrP++0/Rw3oQ3iP2f9jc3n92dI2Kr9F/3H9bNqVx0XUdt10KHsTsy0grDzfJ/zmfG6M2cx1KwZ5WosHb6t6vGaOqUc",
  "fst4XhI1+Kmz8JbXZvlWlldFYURZNsHNeaYmRVj529Sk9EowXQNm8JyaQv1TFn3fxnOeGZ7G3SQdjCgnyO9rYbz8Ckc1ZQanmoFoi9mg0UjamRIHajMbjzmr",
  "altYR+td0RXuss6fnOZbuzhE4yzkL/64CLpSDF4WfpsDHHCA6VYLY+fn+s6QNZ0rLXHx+bqXapnEg/WYNOHamHdXKuGXAbcLWMFyz6rtRd+47GuysnNKWL0K",
  "e855mG0FIKKjBJi2RFjnw6bZMHrk1P70ZlsMB/S4XTg8Uf047+ETiM1OB5aftKLXRqlrVZh3c2MDFqnggBcd+z3klI2Ba983rr+of43aI0FZwimdP2nfZahL",
  "YBLopz/lDyn2A+okRYK/szZGOhhwjnlwpGzy6EkdeWOuzp6N/mHlCGLyBSeAdcoap7HIfpFyMcfL+B+pjSOwi0jrvlCzj5iT1BRePYXa2fHmA5D0OjEU1pxf",
  "x6h1xBM1kvN53BvEeIGbi4D7bE0X5S3GPum12oXhJo/xKxjGt+cYLzvr/q8zn8dnMku/qrjF1IP/jf6ek1Qlx+zQzY3eGGBmWYQY0Ki1/Bw2FJAPywiqNqLf",
  "yxyuIiz/ZCE8OiioWLgERxeqJOBZtOas4awBarnWb0mdsezNnOMlsH4ZN3Q4Y/T7ZTn6YJUHGhye9fGZsltnCBQdo54DmLW38oz1gGH7rTnABcHT1s+Ieqbz",
  "JhEtN7Gw4WD2ZxzpCjfWBGD9/p+xQNnFmI55YPZZSNveZ4WpeG5SroHQUmkyM1VzyF9R7ICvwZR+d6kARM9xNYjTwM7AAm4T4skcU/K82Gz+U8R1dQ08ytwO",
  "WfBkgtL5Qe4hX5OZ00uh7q7i/Ci/sRYwIM7jd0pBAVVMBlU8SZviZj+z2wZzXi/eSKUdXVEbB/HHoKsF7ueEP/XU8NZeEirX3dQQp+M/xkTAyZzCCY75rimn",
  "56iAY1SJPO1bhbA102bXoHQSgieoO+Dm8lM42oI94j6n9LnvWSmB+/k97lR3jYcSO/YT0h8pVQcT0K+rXmeqM3lYS3vmMrQ+GLPXeOUQ3wmtMxfXvl5RuWE9",
  "+TiI5dAHiau/319rrFngmxi4ObpRmXfoOF5VyHtUJ109C8qxnnM5ILZlvoUsMoNHW14CUfVE4fUGe7G11TU5QSY3f4j747kmqwEMB9PIvGi5NMGbGnp/4Iqi",
  "7ECSk7G55nNwnLFZLXobgyTRsRtM0RhU4fyIrqZl7/lZnwZAhznoeIIvP8eJqiCse6AO2iDt4011mOFDumFNvr2U6dKp/SPPUjQoWKdPRKodcI1PzvotMOxU",
  "3hRQuzBnUEqJqJ2xl2risgPfl8yDZFCwf32Wp8/TVAE0NKBV1DPNd2Q8uVdwkx4lmyOkCoLkZvfwllHAAFMzjW1XUDM4v5okVYCFo9GlRt7g++0WImHvc8RD",
  "YU8H5Uaapxf9Dgy9pkb6zFQKD1crYVPlvVKePitaXyCcXezT56isQyXLtHcQh+BQzg7LtyrfZHliFhnwt7zh6XDGSB8MVrCEZO4rgYYsYAYcVr2HEui1BA4V",
  "5a0ZJdSEm8VsCMqwXaENySdn452FRcyIqFK/micPozUZhl++8suNmEiOmgJmbv2YCWGhkketVRQeWVYdicND13omMSu7TyZgGZM6Os8BEtULsvFs4NzPpPyC",
  "55YaO1hzhsUK/SM53zL0Wx1KSe5DNBWpQNVgq8gCiX5xPWtJknJhh+JxkYgfwUvnkpoM7JlVkjLIqK8lHni4sYhNZgmVgIrJVtXpwtkRddq2ydRXzXrfleag",
  "qZ2F+54vCCe2u2zHoU9CFMxwcITUTOYp/9V4Ta1TGDExvC/oKS6vi/s/dVxlJ/Oo0GAmudnnyRA6spbIjZ1Kja6B0sAWWDXAWc5NyeVo7pOAELn85zhTz5ch",
  "jr0e3uO1p5J3yjtCeabC4tF3jwXjaeKLmVTVBE5DTMVxsU6IzDH0OPOIGtymxvukntnig4HeLHGVQt1ig5fdvctfNtWL3ffWkcMBT3giVOd3YsjPU78f26Vl",
  "jp75VGKb9Mu7B/TjKDti/MWBRUvhuS0ZJEMD7wkaDwL3VbBave2JMvGHrWIxib5IUOecIc4fWbsY9181lo93dxJ3utUkpdtFpSeyqJG6z5lJGgjfooaHPjWM",
  "M/ouZAEi59QsDHaR7nonzj4q0As4zYnGJUWEBG3kbH31iRkezE4oTH2mMYU4qWgLkbG/rIIxE45S/E4HIrYaqVM5ekNDdWJplzwnhOuxEDCowgLwB9lhIja4",
  "qJfuw4AwlrJ/OjvHSK46LUU91po+FXiCepxaodb5T/2vRIMTJYj34EYuq512lpBJTtXHntmYTDJq35k7qULOIeTi4RkY8Fn/NP0o1ScTx23mQY5iQIIdOPUQ",
  "VZ5GaJCSTrLOfTghLXY2gaJ0waOPatlE3mcVFuenu/rYP6LiDzugMxoyTpXmfLZ1YaxIOMvrXSAQ+hUGXmdNqSs0sdOfoIY+IayWKGicr/5G/bnUJAaobBnz",
  "9z8VNuzB2QVRl/YHD7XDESfgJ/6yqp61zh80lk8hGc1NYRUhFrQmFdZRcwUbRvryx6aUuYdC60RsmzNh7UV9l33kDGza/YsPwAQeqeyjkwDIO2cTGnLvcOjn",
  "SU6A6ADTWRqyVNWAPFwrOhjDh6Ymh5ktTwVeW6iod50jFxV+MkbyUF1UzdBIBvd9s/8Cr0giU9fC8P1jnnAeue3H0EOruHRd5Kp/Aw3FuJoan+eXUrY2mpFV",
  "h1HNxtGuoNwFlI4EoCuGknYglrlO8DlDZPhgYMaLDnpUouk0gWemph1+V1xIW+pj3QI14hbdiTuJkIZ318EP59z9n1F9Uoo5z5CpgMkCOfpslCv6VY6MnM6A",
  "3AwTQpO635ggcJoiwX/+v8s/+Z8FJbNOSP698zfrCIAdNhAiQaJr2RXN/+ZoGlOWTysu7aqZDnwbYcn69Qpy90r7OajyESwE9a2aUhDkedOnscl4DSoWh3l+",
  "Il15Vxy1kZElYCo1ej8/SVXcbyFyD/jzt6Gl3bXDAI3h6aQIHlxOYxs6Sm+B18CktyoJdURt3ScW3IfXPUrxlVfmSSIN6k46d4OckXj0l4r+8M5c478Q/5jJ",
  "jfPQd8fE9iE631oYgP9l3VMnzVxOWjjrVBpjnCX3lkyeOnWhNlVzr0NrwkbhRSEWrF90GAS7LWF6f+5m2Cr6LVxfDQcLiebZoRymslVIBbdcHT+GfimXjDYh",
  "DATZfn4+xx/ydevg6nWD97dNJii7gimrJtrPkEYilAM/Pz8TZm3BjWjK4H7edsX+C0L4I3D+YUL+IYkw2qXT7+Mpd0zBU5GL5v9dUQ/nOTUaojbQZrQbI1TA",
  "YQ3Xm+Vk/xhyS3o/s9cBpFFEE7tRAxccYJ3MUkzrgmtPEYBqnDpYh0lUI3BKb49gAYdunp4eheBRfiWSA2F64ln7Nx8pFOLeoS4KbCX6+fCUXbm10ZsZXTun",
  "2gmngdS+l632NCd8NkmYcNwg+PdmBXSy/nodefkuIgiZk2LwS5gE7gr/61kIDj+cKexmAmhmzT2Q+TlnTd81OkeAsb5iSHuZyAiMV2rrVMVZ22RvrRcPzvxK",
  "TaY0Oj3irrvVRfpIjgOsKcMKp/X2+8EQ5EC/zsyQEU4F/TYip17V9InKojV0Hcl6lXR5N5iQGlQ8C9CZrOH5WNgNctclFzBCBtTdE1b8D6Off5MxQW2hvBsi",
  "kyOyBgnrMHSb/6XqmI+VUeSeAGU6dQQY7OmfLdfgptLWWVP7wqPp80y/WFM0drvvpNl1nr0mYmjcWnulxnUYFkaO0L+WwyE4jfHC5OMtpZJ618R178qhVXP/",
  "RAwGw94V0n0AneI8o1foIYd8q53lQ50O7moTgQsHkvayhnTNLAdmO9RpuIcOp4lgalgzEt089LNd5FRcJ0J6QolzVq3xPkpPmAJct6R4/daeqpm3niVogUFM",
  "5dHD5EFcld8y7MUf2xwbYn81xtDm/TEamnhTywFSyzttjarIqmWlccjZTPSds59E6x+MmB/Cr/9JDg/HaAiLpHmIa84b/qxgZqzBD73inqqjQCrxejCuPfDo",
  "zEGdyVXWLMcC1qTeK1/yXJS/zGauxcfTsu8ZVKrkTQf8bw3wsGAmQHvEiBycmqZ9l0LPVE6U9llHpDnPJoon4JRk7yqz9jpNnwpIwvJ83uo3NeSUP5sDiqb9",
  "SRwC1AkVL5tubBZj8C/fz9TJBz7/6it54SvRJm/OGTF/xboOxLtz1awXj7dqoNyT43XFBOcZEBH3r8DgJktDA0Vz7vpfW/3KbV7eCR0VbKyj3TCZqbsnHPW3",
  "/rVphEfxtHShl0PwCkhM6KyN3k1XuowaVHazRpYKqQqP4KpDEMXTI5eJjCOAelcNhXofTwjVrlDHYnK1hUKVzQWOIIP/4L8jqPnj/8EG/sk/+RfSRxFq37BO",
  "WSbquBsjwa4qMkr69m8gd5Am34X6hcuN+cwpCKWzanoj8zGx6y2jQQM59Stm9OuTAGEC6V9gxlIoU6pX/C8rdcj+rpHFU6d6z+cEUfWbS3TUFqApvZD2he8w",
  "VlDufXEZ4IGce2euEXKejH/8/DEJ5N6FQ2D1dxTJ3M/IeTYVnvQ9z54V+M9Z+BOH9/b1l5Pnr1tC7OeAxKiG4XUrEa7R/iQIawO8MB+9rbxP5v5KIhAgmHX9",
  "JdAAkPP5uRD6MkAUhOXaCnRx1JRGPOgkPZUhFXMUFP+xgzqdWUdJ8nAaxi7ill3O881zWBsiZh2iX9UOqev9SR8y0S7fh950AJg4ywL3epd5XyTrtDk90HDq",
  "NDwt32fEjnKezaz9X9h/k8MAlVPE/H3DfwLwXns/1xEUl8OLBRqOUNpWDVIu66zv46yd9ftvM0JS5oW8zw+fJqbfZ7O3alKOuXIg7qLXQNZ19CbyoHVol2QM",
  "5zHex5pC/TtXqRY6pFI2MJVfhx4DdeYZQkTaSJlKHdUKIEDB20FFLDQBpHCiaaepIyEl9kYBig64wQtgBZ6smyvocyhEQY/+nPhDHQY6c53D//w//z/4v/9f",
  "3DSpw2tLrYOC0g4BmSNLg2rQPI9FGMuzjooB7yBNp4j0dx1FJsVEBQTtiJHEBIiGLnMXAogYP1cK9q46fZ7TXBMdU527Ebobbr/8up7mFe14PhLGXWWC7nrN",
  "WkYVTxWzPwmI8aucJkt+cEqWTj4cAta7mPs2InyUOwuC3v09Q6L3kppidPrvBX/CARN3v5Wgcv4a6s9i2CofBJruh5OtYbkyUKUdt67bd+Dj1luVBbBxCw4L",
  "F5LxccHdSajx2KvADrjhMGi50KewfnU2UhVWF/xb5gEhZK8W255ANTaR0qhVsF+YwzpYewcLr4NFy1P3+B3kcVQrc0czi5Ofxfys3RU39HifoAjzmHX6DKIq",
  "b6y67qvPciuTI+xDd/gPqv/62+IwXa6IfDH1r44uWWsglAK8wxp6YFzOaVxZ+dnnRZcdZc7KNuCDBZuPTarL8LQxXmeknrBeOF/a5RxgDmlt7csvEQ6vnQGo",
  "E3kDAusbQbFZtn4jnlujHxZdVGnOEhYBE144YGaEuSVbTPB1f8FVXTWop77hmgViwjMmCjs3l5I13fR5d7OyocmvMxjwo4I8w40++4/VAxNySju9H9Qg/kt3",
  "B6wKw7xkVCABF37j96RF52F+87C6G8Kk64zpA2qcgoZkVb76lGfpVigHkEtdYC1yaY5Psy2KDBurWc4b1Ny7qekPBHd3TSKjzKLPauDXdi80ZpqyVRmQdA1N",
  "4Mye7jyyhLHBGmX9wIChUgKzbl3YYGLuOQyxjZ5TZ1hBwTHxjdwjN/9TflBN3+XwUcV6x+HfTHROmZ6G020ILegqzPlMnw2JZ71JeJBbCTi8dzaSwuVB5N2i",
  "359t/SpUD+eq+1oe5EWVwtyM7Ka39/dWqo+xgVdoV0rJnuMysXMiEHUuogQ+KeEnvZHWNU+Ln9jKYK1gDmz+0LMrCPnu2Xrcxwf75egs5GRIn7BVbRU+1CHP",
  "1cTYsE/JvuUuL/31ws5ay8guT99x7uu/4T8LIM76mjXWGD6aWyAePKcI7qksBqkc0duUsCZKsQ83MhMVC6nPl7FWtvIIVGb6Z3hPRJkan/cJURWV1xzxsPWU",
  "68H8rvHRL8hC+5pXnUyVA7C1AOOztEKcOq43mNMUjr5xFbMI2G9vEkDrtHefH3PXclETpYeFcADCx5Xnhao/tApseH1O6GQCLU9ekl+elDtZAwirCylJxqwh",
  "OoC6ZvTORI9R2DMrX8GDLPlMvghRORrt9gwojuPENdUTcbQZYw05TbAIs9OUasB6ohHZszu3xJVsdpL+DEti2uH7Fi/XTQqN1SnjZ72omDtWi8nKYe9b+Jux",
  "kRdz9lrwRl7SHOXNt1SmE70QfPzqmc6cqCb8uZi85wh75ZBjSxrK9J/pjyuvs+DemPSuUbJvHC4OPj7N7+ngvG7pB+udKuSzNHx6WKEtimr1M0CK63dxHVh8",
  "pZWL6PZqeG00tqEeMO8nWOC0g8cF7pHoqpJ4mGdJK+D4HBkWnhTDDmijCNbWbLxjFB/NLwl7YfoEd+t+IA0hlcHV+5ANEnySqYa3U1vPwXESpQB6qiFwwNlX",
  "9irOADELhzJ+9XhXA0kfSEqjPQJgSX/Z5W0ZLRcxmmBk1vwE9hkTpy5KHcXCZHBhI6jhBDR+O+vch8bFtI+EDXp2+sQmvzR+rtEp+4XfmUH7jDseY7AFODdz",
  "g5eYWTgHVy5lPkxdQbgVega1OTu7qw0+U9eOy3GV1rEyDY/Go84Bn89K5LeoMlcaHAD3VTdpMW9XePrUrXMDLAxAObjFvdPAcAhTEKzzx64B0bFJZ/rjOk1D",
  "m+vmc3ATHeuvKrWFiIPwe4+Krse1gxYtZGNkTa1iJJ+nnkzhfKogX44gn9yqaFXtSlRQsOqpKNIU3lUD9EQ6PNg7dLpDjOvGcx+4VDyvqLc22JmjxnhcgRCR",
  "tdx4P5zZ56A7LMOIY4JjoY4NPoOqR6jgPFznFGKMz7M5PgexcS8P/sSZUJzS0etTeGffzYMyQp7jOl4YrWAnneKxg1Ip27zo5vlUHBKTNC+1EPfIvIy81RCQ",
  "fK31cu3sXVmceRiDLJvWfibZX+oIeAEI4pmaCpT6+BXCqll36FnKDoU+JlN1uGA+Q/lNdYZDJMRABmYa7MP6sWrqBGPHhFieaYFRATX9xgmCLmaTFFCbelcV",
  "umkpKEnuTygZpsXzm/zyx4VNRFdwhbB/sClQ9KHXgexKfLiqatBW8nWhy8CrMTqQzir1eHztbzsFCLtW2VqiNh45XL6q4ov8iNY23219F0eiqnKegP6m7JMc",
  "eWZEn3CBg9SeJW8yfGaQcfPK5nng+/GRSg4bwEzgkA22lIMXWgf0HXHt+aGINlxHkGbC+QQ63zG1KegC0AGyNubaebe78s01eZoKPkkyUzvDs/CjmbcG6p88",
  "1J7Jm5jnU7cRTvpX9vGO78eqdMSZrLH07D64nDdPVRq+RxA2KUtokuwnj3JYkchX2iAWNOCnKg9aE1Oal6v2sPq8Ii1s0rjTGL+w9Tyk6wwA8jNv3V7NIDil",
  "bejRp3VaOAwtSjOEuXS2zgNzdQSmaoEZ5WSD/ikalfmktHwqf4k/VImQnf1gw2YeXuXIqe/5UmYI7WY5fcAFu5+N3u8aQQtAgcmMAEyjzHbzF1eh8e5zDhk1",
  "Z+KPrM54QuqIRJZijBdMKMGjAxZBViV+e2AvsYpiDte4ButUMdU4tTKFmVHw4fftqS7BwM8vYdZOsbCufJb+vu8ckTwEoyqYnlMvKm/9PJPZvwqEVvEvRqWL",
  "Nfdg2JuZM+JNELRNVfq9SyMEngmCzfWcLx+iyfBwzw++QbVhhtdS+TUwALOapjnczFdivjhWOA/omqO8ZzB1MgKhJqdlzOA9g4oYklLh9UoORqcOheecAY2Z",
  "swFHWHLD0NF4B9p4CP9YoE/J1yQ096ykHIAANdHWOXjWp0HOnh/0tHxiK30EF6Ul5dbJ5gR/jdWDPRwq7BTfAlTAJkqIK3LaCblsYkoJ2Pzw+0QH8Lim3Zxe",
  "7DkOCZ59/AxE1KTWr3qDZg2o3BXESSpUMYX5NXoWfF7NmJgpFFDMkJgBo338cMjUnESID8kuhkApZHaAbX1+XpvNQuqQMaBsiNmYNDFHBecKIR1gO6vwDbbG",
  "AipuDOC1UGhDabcrODw5rMpoNjD8UBtMfKKLw73jLCapt+i00Quct+oXauJMn+XhPU9sMnb4doGdZkt4uX5uWJjNEI9ipwkiUJEcTHArCZE1NQdir5W7iHV2",
  "ZbKC2Y80UDNmCLwFDmQGKL/eFpD+/9X097m2PU1yHhYRmbX2/fVYSEvwWGSSzRZFN8gWhyXYZH+QmoZB04RhwKIEeCTve/eqygj/UacncO49Z+/1UZkRz0NR",
  "wVby+0OK2kB7LmFAahz5Ya6UpcUk6jWhgi4fEYlmldqvY2JQmAGP4QAvDs8n+szZG6W/Wn+fBTB/FLMk1LE0k4j/nG6Bj4Zt8vsnqEv7yF6ER/milOkcGi6Y",
  "m3Rj8oJq4GBVoTQoXexPAckJqR1BGigKcwTtQvUBdhAQUpsPiu3yR8dOZMkKKJ2ik5615PfhqgxhG6vx65Ro88QraT30W/DZslEzOa4TzUaq3oM7DIdU2X2P",
  "nwfoWnRoH8hscsGpkj8jpFhLM+KIFeZ16+X4pIdh/o56AmsuWiKYrswBLYQ+OMpaJfdnhFPqCCSdmsPxuQ8w1PEMeGbwjBdR/dBEVPvprAnpbWamTs7VBE7h",
  "B1ixjRogfxJYVcrkMTJPGNWZeRyylKRLC6L3vvyqOPiN5tk7WB1r6ugX/KJUY2/yFN4UyWijzjE+L8TK7HrOzIHQWneoekwUv+HA4qXNC/8X/cf37jtPrntP",
  "pvCf1vwzV3kqoVe1m8APwrqAJwvj+GQPMQ3D+LpUfc5KQ7TY33kpctFWbVUsy27BcR0PmNsBzy1K704KGuV3DBV9zKRFz4nFJbvTf6YT/iJmfsfeVEZ5ARiN",
  "M/DpIn7VTp0/DibziaC9iV9QiutBTftUzVb4diZFvBWaXr8yncImDgdnqz5xrUN1JZov6HtGzfwnEl4kxHUPEjs7/7IxJ0iD52xjJw/fCah7MaGmwFpDLBfJ",
  "/MXmcQIAVSOcFHWsoMCACxuZ99DwqoItsAZGoeupZ5SXilBfEbUPpoW+gJEOUf/G0b3v4trpA/QUOJ0Rb2gEqhAJS0eoetvyopEuyBdL7SRl9JSJdb3g1n7g",
  "QRFvbmuPBmryIKg7UQgRdCkVbUL/p//m/+2fQDHuDF9o/d3/jn8Jk2U/x8p6qXXBLuns23H9yYdxt2K6h7NgQMvMlpNCBXX1O8GAh314efbMwRoQEPDsOu1N",
  "avqIP9UafGwY104EIUD9O+ASUIjgK4RcUEqqlJGazg/U49qrrHgg/JgAHJJ/rpLrbX1RLkvARcJqGIJrJ2JZHLMS81pAh1PWyKnERpbd5D/5/z7/2//xTx3X",
  "+IQS/8PWX61E4Z30P/NYI/O+FVcl8ixTDKHe6IsTTxTV24cNT02duqmYKympIOpdb8CvKuYaXPgXSUI6n0hH5XYREwnkUGR8Hob/TzEJcYpTgCYdGrg++dEl",
  "IZXJIBFw1snC+5x1COiHGj2g3ieIzBpiSJ0A+ATTg/Ve1aCOPxPEJSWYtWs/h4DO2vl865LE+B+w118e3HPofyjjX5p3zU6eDmoyAsL0FmZhABRP2fkcxj0X",
  "Bu61awrXHqXKAIHFrUVLX12bt70m1NF6qV191lfGOsVTdepkWTPS/RuxhkO3Z/G/HLmncoPg0ZYsXx8YMZqfq5FCeNDf5imDdaYaW6jdifRd+9dX3E0zZUzr",
  "3twHtVd4eVip0c0bIgxPoRzdQzJy8aLQoeYfMGtwx1PkvxAInrX/4njg5XU0xUnnLJ6yhyoY/FZB3+Xazyl/Zqb908F8n6HbFwGgS5HTycKAw36XQ6c3nl1n",
  "QQN3pkge1gnKiHA6ZAD0jpv8zzSJPrqmlO9VPQS5GB9+n5r1ApJ+d6K1sfu2xFLv5/01DqD+0xMGPdDFO2A6yOkpcujn6ECEAdyNwaQtKLsvLIuWuZ8jzue4",
  "D/EP55nBcP2zew5MWG7gcEjen4WeKVBH2rodRW24K1MaTFhx+5SLoeEf8OgwKY4O85yyRX5XxEPeIzJfUKOwX2gq6K2L8GXKp+Y5DRj8LxziB1vEKGGIUyAc",
  "NWzpjNZZ77KZsmKZ4H5wVk6eAfVK3B0CCc+KkJH4SvKp+5kXQk/HlduKkk6dhmnBTDpGeqbE9E6/6xKlPptr72VXTGq316l5fHy7F3LklBsWd53PgTKCggsE",
  "YQJ/3gKdSp2fBpOjKdS5/UAgdXpHaU4gDB0IzOiqfmTaUjy4UzLUjCCabfAfPa+5N36AdUOJycODw4MEg6Mz963h1Bk1puDW/dtfQfTRQQSwOOOWQQHnaNCO",
  "TlqWB7uSzeMeSlgHELc7OXoHN4FFZ8O/04ftMJOWvtj8c9AEoZXIS6rjeC/2iFanrGmGe5Ckt4ARdF63deIZsraHMqoysP0GyZxN5ZTx9AK0GB+OXni6eOsG",
  "yTmzofqb9+FFUVbMnotvl3hRBmkUB6zTdKOZjtI11GUrXA8HsciOgQrUWbiEaayDep8gyCpXyiSPECwCSF8Az9QZFBJg0SxPVZxk6kaENTXopHgo8BAcUUfG",
  "Waky5wK4ePIcK+YVwsgFkiIwYur64aY13VJSIxFKQTfLkq4jnARcB/FVuwfLdV9g2qjyD892xBUCbysM9Lpqe8wx2XNDpqeB/dAcBJX37vEDPA7Yxy34OzlD",
  "rAljzHF5AKa0+b4IcLB/2CV/IKqXreSIRfCB+viU0Dng1eyoqJoymLqc7FOx4O1bspvdEo9rXqZpO8KjU1e/q9gY5IHNmaIzR3MoVFI+L9iAD/EiPgHG0HYt",
  "CVUg5NWDcZrIrsypiZOBUsIh6q8DyI0Y5fuagqW6Z9m59GPYQogb3dI0o3xmbRA34KSNm42NMpXnLR4pXEOr+hNUuHCAE4982l2/y0IdjqjZIorTZhmgLkLN",
  "BNsJotHlfUunSKIIfmJQIdzBRWwnYwU47JA6VL1Vh0tmE7XFcKYCUTvtSu2ixLB/rwhPMpVZW6xX8S83M+XSYSPrW4ktDgyz/uY6PswQDstVNm+NpoIm7KKA",
  "I1x+K1RZwYnOc4RbkhIjoZnAIi55vtr3iT1EUFsGuqTTtYunNyUPa8Q0WlPiodq8AzocFEwa8ro1cisMi6eOzr38i3gfhCGw0SkdKfGdJiBuTyPn8UD/WHcb",
  "g5yPR+Jep6anPB9dc29NONphgfWtnNbo2+ePb/FdyZN11g1c1787E97sJkS58FWAkKhx6VxhSqozoLO+osLTUXBzheu+GU+CQGeqJjviM4Fy9yVhvay6ui5x",
  "Fr6papx+lwSTm9OY6cF4JaDu008O1lmHMpNFo40wCxGnFUKtqRGdTyEsCODKOKQoQFdfGk36BHVT00AeGABdOEGnDudXICEsfAbH12VWb2Ht9gXYY8NK6moM",
  "iDEErgeEG1z93OLZxvLPnDmYdMng++GcTE6CTDyFqN2AFoaRGgN/it6iE1+13E5hv0GyW1uTtYDZ8h9+7apzf03e/Abp+4Fe5rj+GLQLLAfECYbxg9NX4bhj",
  "F6BgsvgCaZ97VnWKZvUIUOSXqRmrKkJerLjUcxAcxOnfZbhKxjxey2Gs30s9V0IV4/n8qo6yNqhIS8eS3yQ4Fb0n0XzV97g73ENIh8Cna5OUmygU+fD0JWkT",
  "yB35E51pijNoYp3KZB22eszx5JPCj7h1klZ5wFkzoHKOfJKEZ7zrpJ6zC++9gbBqlmsVxmywT3ueYYGbC6gzjcEuE9L5eaCOnmHUJMiw1RMftM8xMIMPwPHg",
  "SCcDJ4y3gJXUnYjQGAyl7HyxCzjao2zu04XQx9dQc8eyq0IKHOSXSO7F1O8NjTznsF8jtV0ejPM5az9poHLwgr9PqXCmuNds9P1Srwp6zxAIMapoSgdBwN+3",
  "+VHrcjbREJdryJmoS9bg2EyJoXcSnmWJ4hifq7arkyYuqk/PiG5qTrbPjEIcV7zi6F097LnNdzXzLGt30XG6gwxYmQcJwzOugzT9oGyjV4lit/cbs5/CnBOh",
  "VlR/+mlag6fGzH6RxYRFLx4vlebCAdhCvZzGqlTfcjEVs3dyLGE5x2dfBL0dA9PQwPKafle1xAFrgPjUwA2E/Px50PbrYBiVp3iO5xcoTzCZ7xFJ4+Qko0oU",
  "1xiVDpVNdwEXtMwnw7PFsuS+Z6ZbAprJwR8FQ9I+aq0NW0P0KLxK1y/7MEDVJPXXCxx1F0I6qEEZp+Nm5LpkRHROfnCxPZHCCJGXB7gnfkhz6RDnCTF2dbxu",
  "fz+HrNEl0xbSZhC7E9SBly2AAyJVSKWTXPyecJVR9+X9B69Tepf5E36n6DosfTT045H8vIu4eOs7UWEptGQK3J1bXb0WIiu57cQejizokEV9i6wMJiWErCwU",
  "oK1gvUWqJsN4zwFnxC6EU+DxTVUkp09m1wKork5HRuWoMwkfM+GgENafcazPDLA+7VOaWRKNVZUFPfot+Mom0a65iVWN4QoaNL8+ZaJL2zWWonI4RYQii0We",
  "+YUSTg14JuaWrD8PQUNOn7u6yn32uMy9ZfkIGbaN6hwFy3Nk8orMp5NqcFZncp5FeFY/xanQ0Z4RNip+mZGOqpRoHOFaMOwCjoDZXSUq9dTDkHPO7xfJxFRP",
  "RkFPZ0Wf2Icp1uMZTHAO5Qy3AZHfkelv2uGISmt//IDsipCO4SVTPTUVn0nXRjINIsBAmSBeCMrZc9JhRmTf+ECDUHJ6rAvVRlxYqCH8zPVshaRLnh/yAV6T",
  "WKj+LdkVEuVdho/vHexka55wTH02Wl+TmN7qJqcSLe6IjtHwoER0D19NRz7uUsy4Y11z6rKL2oyiuNaGgVse0kcHm4PQXUFm1iSyIOVgZvyqgBNlDw/qQLff",
  "f/CiUeW2ReKLYQAux2RY2ip6uRgrl3E74M5D3OJYB0mvQbDJDKJGHqOVGw2opSdSiUX7Y1IvsrtI7z0B3FrTl7I+iFZ85CfOoc1n8SYn/2Y4zICoAsB2fSuF",
  "nlIi17Er4tXJoCiYoMUalCxocCvPxZQr41QGzVwCygQGZpGJ4h5CQKVRJ6kjPl6Zh75PYxflGAXiiJCsLYXPZnmNXW8x53OIBeI8IcWK0wnBFOOF96bAzWhq",
  "tlLgQYX68vOtc4dq/XZ14NjrvmGvELVVHNRPcvtiNhnJTRd4C4EJq2nU0XO/Khv1Lavt9UUGCqnoyA3X36aO/oopviQml0AJE+T+1JDPn3RKt6S1q5No0Bwp",
  "z54qD3qbBmswsCGyT7BZ+9eXiIz1PruE06Z4LYpUxAlBTHmyRlO/n4Ppg8ee9ZYyveViMDUKFoCTRZdz1Jr9+MFp7vX5vdJTx5Q1VCE3hwvQIGo/1x/AC0m7",
  "GupU7ob1NqD7zKPD/1KGQT5f0kDvO4eNH1+hcqLp+Q+fuA/M5dFf3p1n6t6kew4BTLsVbPEmKxXwJ933PkZdmtdhTWUA6UTk7hRy9c3P727sKQYaXa8LLSO8",
  "waM5yvq5ovfDmLux5r1c2lORKZOhvs8hUb+JPtKtGCpB71h1FOmawSxN+mi9zJoIvj/EByunoFPpnJtMASfCHUwumxD/cx2ut0NknriPG0PpLfmSXXXW/011",
  "yL88Vfw709C/WHNfOchLWa9DkyaHqamh1wDu/BT21u79/NYz0NYUUHypclKnDF9xRlwglImL0QGhkBwaZ80CcKavard2h/NsyWYfujDt07hClefktssjo029",
  "KmB63EaU+Xiq3z7Ivem3cKggI0aHt906j93JaG2uw4RIYf8oRELz/2Xgvi0juJJ28pRvDZ57GX9LhH/FAOv3cpS/N/ufWYMa6mJYazciONTR/pkK7wKZGhrt",
  "0xN0OBRSX/VcM99elwZt11kRhr6lTJj7M15H9S0ZSLsmy6Mf2LfbBNpev3XnP8tev5d88zHNo7ZReVXWWbuN3hGtwKUBo5TjtF0Atde3qBDngpR3efn07qNy",
  "xX1oZeos3TL0f67zXJnj1bHcfKxR6HGQv9h/y61/5bVTiate/PHb/+D+57pxrx5R7xRlmXshqUsdgRlUEHB68mCjrqMNDM9d4W5IE4CUsQt1qH5TCfJMO4qp",
  "E9QU5xK1eeAPMRqzLB/JrRlZQ2DFAjd5WkhkuibPqdNHPAs5aMzdrblg0V5jQUf1SnTK0XkME5zPBg3TK1NCpgf95TKh+muuwwmmMtWHBcuoPkok2P+R83/9",
  "78wT5Ig/7IN/+v87//t/D+uJMMgpqU4FEubBtOmwUO0gdWqE5HqagpUBTsW8zJa7q8CILDPgUdHsGHNX6chKyUSA3lNAT748a5aj80Q6cvOunifpEVNEzvAU",
  "YcEKDxVOyct18VfGoRL5oid9q8LzszFwJIJ2ZUULN9EpKJziQIf1N89BulBHPSmrDD7DCjRi/d34ryYNCCoyDqZ3/ZP/8//x//mnSWrQ8AIAJBX7zv9McZSZ",
  "DzIL5f5CLB2VaQXP3PZIlhGKp5wyiNWuFGm4KEK+KPeB5nEWEJhFiP0+YZ811PXrpXPN1dMHBtoLP5wXVUzFdX/ggFJU1MdWys+P4hphbfEKjaZki871tB9R",
  "0OmYKXQCSXKkOn7bBzg8LGZX3N6V/G34r9U8oZfHoPrX4zWFv6p//1RbdQYYYzaZdNVFtUEmR+t9S/vs9uehJ40hbz1gfiyNpS7Oc4H4ZnZbJ6rG0VHMGqPU",
  "oP4EnInOh0FCPGGSEHPYPSXm3AZ1CLIuiV4DjacgQ4dWUB/zTeedfEOX8wrbq1EASB8ixcc+ql3CBPB6QnrtoTEHqjBi7vy4Ro9Q0HgVxstRtc3/8bsB3gRz",
  "+Nr7LT/nTK3/JWHYXK+W6i+sinnuC7V3X4VeA/3gsPagPKMbg3+rCwIBZrIJqksRLPJ9kMzD92MT75LH1mhpRKJ/8/eJfUh5OB4LRL8Z/OG0Ura8zdhHgVud",
  "15uVMnawXw198AvfMjHgc1D4zp02sIpc4QRVvzvBYjuCJjmrWrUKKF0BWy5YvEwSIt+E/I44+Xv8VZ41OrTnsGdFxtFXk38xC3NitMm8Tliiug7sXjWVKk3G",
  "+KoyxTmlJxaMSSbkMZIRq+A180bSOeo9Y6Lqd9awgVYSRtMaeFVWDcgZwFapjbEXafOcL7PW3KZP3Zc/bavgyRwtSs9xqbnxHKky/TKnWVsz+Jk8C+oDd4Vl",
  "zvDdAJiv3B5ODgIphXbj9PkGBgjyxKV2/g4iNus0+6jodqFTFprnn79/3yFnp3Oe5EZah1If/rZoB8GID88gWjyaq1ZvmeaISToDb+xW1WSXU0PKlirb1va4",
  "NENKB1kvB36kQrn7p0LZWppDdIeaPYoAtAvLIYUGV/R0jORdDKZVd3h/0yavVEPEQMv2ASrDkYIEaUiK2tiNcahDCenh6T5cqKzZAB4+wBTD/2my4PgMWoUv",
  "T9xh0ahfwn7KXLWp0aR9zsA8h14crptbBLcfWdwRsFF/rtq2lWgwCQgsAbPMyJ6pA0Qzi4JmoWIXnAwh9fBkaIg7GyfdVTNzWuD3p4eEdY9/PrtFtI5lccsY",
  "drnO0HPcSBYRAjc4zyCowwZnVNzOiS+HAnlzVa1ZWERvfZEzqBcPm1ObYeDrx/apUTBThazZeKpoKisD+fxV/gHfaI4Y7eYxHujKrxPF8K7TtOr7LLq7ZPZ+",
  "MJdm/XH2dWZwTn5gTqsEPyzMWgDWRDVGu2kkyHxZHxI5+BaXhzvnH9HFXMmLAWGct2kSO/a3yUkBW/XEg1vSbx770CnXegwQ7lbORdvi9Wn4YYqM/LI470/x",
  "2XnTklStWXD2SRJt3Vemyv/K/2EOIybCYM33QhMuKDYM4Y+GWMXdlipfQcMi86mEWjphcT5fH8Ln9mYS5SCeXHJkY6JkbwLZxYtcl98NsCdGz2vOQATOqryl",
  "sE8B6A+0y7pYxkxlceU3IFz3NzWlOjac4odz9BY+0v3q1dMHathIcDzwpfK9Ka6pgWwlJbCvgaawi0tZeVUZteX4RS1X3fm2GWyqmFVDoEKmUk6qvZvID5mq",
  "Jb1vifQefYDXEcnfdm25+njjWp8Boo25Iq3ReUnJx4cPUVY7w2VtEbn2nng/NyKSUTvT3Rx0hkIw5xLehUloTmSQg3XlJ9YRm47VKs7WdpvL/Xb4vAc1+yiZ",
  "hE785I/RTZ1X2Qb4ZERJxbOqnxV8UeY41Ecb9OvLLMq3g2kNT5Hhi3B9HTkp43KF+bo5YLX5V/6/YwzJuzJUPTv49RRT0a7dM3dtZ/ugcQhf5yX0DZ/la5Qg",
  "R0lDhxXwLAPcYioC/RtUuErsLJ9h8YSZkds5avBI6VQgo8I+9k6hC4XZEAGH6ErVK0xOQdkSj/74SMDa7+6CayNNjE4Kiw+9RdbonKOzz7YJ+DMBBtEfqKMf",
  "hS3hHCEFncMjEYP1CoTTXqZYRadaThVxnVhhF8EZD5HMa526p2tSqF/pZApYzsjrM8r5xSMXE/OcwQDermHBurXe8QozT54JqsLXw4HKQiOktKZdM3+oQKGO",
  "ap6Cf4+kLt8srolBx+tltjSp90YqThNh/T53MSZlylOZb8BX+MZlfDQY10FD6gar5Pr+uq5m/Yno8YG2I00phm9gVMcpZ90d66HBb5EtYkczk74xFWTnKFpk",
  "IadxSJYelixPRkMwiteA79iDXzMyDkvyfTlY+WWW8jIvhFb7bJzaKswBeDqM4ZvtaTBviBXhz2N/YWTGx1tLMnK6eHiv3TjJU9S8kjvRntIrRn/K5NwdE2zx",
  "3FTlcireyUkER/Uq74niww42pwbUghs1ifqnX6LTOFgIgmIpQq7GXFT2nEyWIzDTwlsnLHRYPj6GT/Mdz0GZi3lsa1D7IEelR16XVxm1TSeZBnDiDFI0hMqb",
  "5cYa6WC1zwmbXQh4Kmfot46uunFhLdMgF6BR5Mwf+/YJMt+iGzswUnrGdupOuQe/0nryR9f5ZbWARk3JAlQ690bCHTzh7TziMgroPhTPfW6B09scdD1b4L1i",
  "jWybc1H1b/gyiyj4ov2/SBmFzktvQ7XQNxk72L6bDB0ChQIWgTHWF3ZnsixEIco1Z6Vv3XNhtLGcy+oCOlulzwRGBFaAOV6tIJrw1YHcC3NCEpx1+s8NLM00",
  "Pvv0ZiEDcg5URZNTZG9o6vT3T8FvGTYOUieFUJ5fQwTYNIYoqYKSbAz9VOkrbeGQ5Xdp0e+fByMZOyUWQGCZALqTh4T7zMPcdLGFpAeLq9EzM65LjK0mDvLe",
  "el1SyuC29CsuYmHTYywk3CTGaB90JNzocBzDwNSk/qQZWEm8IdS61gtAs+66L+qiVQ52I8PaLM4n1ecpZXr6ZfQSh9iD2VQQMSl5zQpbSrISm1uYGph4BCPY",
  "lFz2YftzcAytNR7X2Hz2OKtK7Xj0IE5OLWGeOHWwb4fM7EzhpQrMMG/0BqdGLDEMRXkQxYsLxK9wLrjsuX7Yc8hykc+capxtHYoA2sm1jJCxss1A4BEhwuaK",
  "jhpvNn0tsbvMw5xjFJ2OcEaYIxo5yanXbM96lbbCHj71FacOMwNzni/OTRSRp7xWVZStoosEMAMcLafKzd2ConXqEX8vblgZzMBvibo+YDT3hCNM5D8yVGrw",
  "G2NN/e3882BJZSjvpcl3KkB5ft6tvMaHe414sMBSyGpBOTjpLWyTv+ArAuo/M6xom0k0usvTNVrvCGTwu7pm8hQVOFIQQrbWmQFmNLW665EPZ4GjIXLaLOAQ",
  "G+Qkn1Gn1EbCdok5lQsjzOHL1LQ3Wl+2tIqDdzCiBrwcrn1o6teeFth46te3l4zS/gh+4ZKmUSuHs6I0+fw6Olent8I5uyg+rGLHGQVm2QsWuVlr5m2n+wz+",
  "PDmebc0OBRc/hTDC8DWjZcKgWa5VFfKs+HCqfxnYDFkh+b7cbgG1CiDsnKftLJxSBueQQg2yUnWpjES2HiViandM/MgghgrryR7OqjDsDVexas5jxPaq05yH",
  "bFOJOApQ3uNuR+D3/PlzTHlH+df8h0oFFudMGj21eQbnFDFSSOOQK+Z4jnOUFWtlvHqjDtOaE6/NwlTwtNuhorUkIfni5pbBJ2/9mKOzSGcfMuFGip/XE6fT",
  "mqMQ4hEBcHgmQXqJZp5JWcAWzzNq+4BwCGVG/ctH6RRQ7ghGQx6NLi6upJPhyjSmtoBtXzft7+ik3u+MKt0X63UQNeflSlJQX+4VhTklj+CyqSJeH50shdyP",
  "+LfnL+NDiE01QFhGQu7qJ1RP6xyvT91wA0O8o91Ugo0dC/hBVn9kVxOZ+GLqWh+NAYQcb1d6lLo+2w0tJSfPCy8FfOyMwqE9Qy9A3zrT0MmABE+j5mpeUBPx",
  "izM1W/uRdUpTjR4DinFDaNtZcNmfS20KaxWwOSeAdI+5ErJ/1PVnkE/lOJx/v3Lumit+MQmXfyvOYk89kh7zHTunqkIfn4+mhx5gl6eh9xCm6ClFBYCKMO7D",
  "TSGobPxmEXyFnkzu9tUqUdVjWg8na2xVqlQ/kTUfUcMV3bR1xeRtmcisl0xDBvYc49xyKmo4YvAHjSM576GgLR+d6suLwCEBNUEeZYbG9H05iAj+hCe2ccoY",
  "e0x/zoIwA03+FTXAHKlFc/0FiFghUj7/8f2XiFnVNxU0Lupp7h0rPxKqnrDtcTb0x1E4BvZGsBSmT6Adip8MCBZDFGnglUnmoEQ8eaeNUsfQORpraF1CiIxX",
  "75kZlEYhiwy5G51TLmOZxYxn3Jwah4CjpQMsKI5738wowNds1WHVa/HydiSKyw042KoUlOQj4Uykz6OJAQ8soRf+uf6OYHvCpP4cAXk+oQb5+xClSDPHJE64",
  "xXNvmV9vcZFzqHeUKol+7abT+4HChVp9OnUesnLGOuBl2ERs18hW1RwiqIXGwMc+mxqBW9wD+uUJpYL0CMaGMT6pXcxbi9pFdLx+Pa57ZOHV5FSFTQ2q+Hld",
  "B84Z9nUmeukEE5anDk9y/CcFemQZiDS5n9NTXXNQifPUi2P6bB3+Heq8GU/58ycqwLHqM/8w/lfYk+0qgOeQ02mqVovP+gOFOqsqBdcYcCzHeqjTHZ9kwDAr",
  "s7PBAmwoYHzwTQrl2QRZnO/hNPghpkHJ8WPgOTFFeupmdSmIi2Awqrk/ogrOM2PfraBjJgRmD3CYh5PvohcwsA9M+MqJnscHRGGYKmoc/5l1E0f1N+kaemlz",
  "8DFbE84SLmf2v/tv/G//RM3KZ/qQaA5p429n/WVkN9dwVKvuZVzxQWr6MDqV3nLqFj4qCFDGGk1lEJ02BohmEfYt4PnqC7JyOFKsAVhyUCDrrNzd6V2HK7Cm",
  "eBZct7sUnZTY31KwO1yTgtceCryVSIicRZr+WBnwPq4IVMXPHBUyHL73LbM6ACirhm0Y6C0nv2H4fCydzNmFPA7Zgob/4vDvoUQHpz7SJjnRv6f+kgw+OZtH",
  "yfG4LeJgtaiziamKKT5nlMqTRSrgl7GmOrKmIXFdC4JIYN/f8iW21pDHjYUNHNnmi/kcOVjEzSzmV9UpEbGmSA84/Qx5ftELn4THSnDYzyL6yTCMz5zvSJnk",
  "3FxhHSiDo8daPHOEBdSTjb47B7oaWgNX4Sz+18RuYzkBa8iMH0ztvnYi/52f/T8at8Cann6Jvx/9T+c8Ewrub00jiFA4xSPAzffBTCMRNzFdu0cHxVmHdqEP",
  "1rgTTH5tjs4Svz0RwClUotOTKCnU1QqetcX+XY1DcQsG7j8Zuka+nVF6rtid15FyLdC7LPSmWe3BCH1qwrvEAJ7ZvO366yg2e6ZPRXCenDxjlmNznecQCP8z",
  "mntl9+Ead866iTTT7dMha/8nx//Kcmf8a9ffbdb+13JcZ709QspIJEN27zayhtYuRfX147XPMr2+VWdlmAZ2x/dJydQAwlTNqQu8Ll5TGUO4eicSaDxvDSIG",
  "mIjgtAcSDBev+VFm6ZiYjtuRjNTm4m+s38sd0nWO5F9vRI4/m+sb1npJDqcETCAkNfR6W+Zpr++TUTTXT2z+vw/3g9MOnplyzekg6wBwOYCS/3X4tviX1t/T",
  "8eN/of1shfn1rbN8h8vM0axvFWHtPt1HwPG687kUAi+8qrk3aAv1sl9Oe01/n6N5viJ/rDiiTp3nQBhWgnkC6zB11pRDnRpUpmPULt0/OefXYaYyaIdC+ffj",
  "deCOwdodCwwQiOeqGLfCeB2CntZpXwI8Z2HkGvTvz2FqhOmRHHKK//XmUcV6NQv7GTdP4ahsTDNwuc/f1WE5OG3/9Xm+AsRXZbl5prx40I4h12a5eGrARBcE",
  "Gn/g9SWYCj2q2/+0TNIB3KYmwlbYFqzxCnDW8cJPYE4a3AG3y+T30Y9yqd+2L9I1ICJcnQxnWTihpmzU+t0YPi+j4pw/vgQ1wXPOmgg9ZddQb/Nudhn9+FNh",
  "+NkiyZz+PjD/q49Qs6Ym8GcLwenISMSofnc5h5X5/Af4X/7E6ao2Oam99H7eCzV0tP6MZvavAS6iToiiOYt6rdJRApQVBGSIIIM8HASWxGMVZoqcpmc5l8UU",
  "3sIs1750BzAagudz3Un9jtpt7NJpmyz3AQ0jvTtI1YBH4DCkZTE66xaiR5g+KhnhnToDrIFyz/37asIC7edUyv2G/4/bAwNnXcS7hlOutzXp1DBTCZ5vWZf/",
  "V4e1azpeOwLA8+w6ulXe3RujW/ANdd2zmUrtsI8AWrOO++r79mOvnZpCrsJEGh7V8aNNcBYzP9+4kJM1dJ8BuWB6CNJl4f0YNFFvafq9df9Tkx4yEZDUyGGF",
  "2AVybnCzjixdIHfcu06w7H4pyknJRq48r32AZcujeaS8LgvWd3gImCkID3cv7ClosVYdVc+s8stzeC56ymRgl36Xqk4R+83Qi2VQ9LZ78MACLWVfnAZ5pPHJ",
  "zCyotrrh0OfJP3oY3WtSBLTPxABqsLwBBwrYAE7ZrUYKZRY2EvK0jPNL8Z4zlii7r2HXnaZuYQHek0n2nL6AU7yvDRura6anGpmQOOxGgGXN1OJPZbkiHvHF",
  "SakW+ygMwYKnMudDz87Mib1NbWuBjcyIzssI6q/XvDh1DltVagof2M9aWuz9wkADQmdxi1CjBClVOicf00XgKQi1+agim0MuzboxkxjeePiUY5jda+OooIse",
  "MmevQuGEpusg6saykShb98K8xRXvGdxSe7HFN/HaWHnoDgbnHx8yYE2lM18nGQXK0XC9pKD6nx9kWawd6BqiUXwPF7PCc0n7KTWR9uMkH0PGbhYzzbNS4mIY",
  "UjwaJrH1rXhfakblq7MuliZv/cT5URlg1umr/nWFIHMUHhm0dwFEY13BOHMqmTJc3HVBKAAk672A6Lp1kzj4+X3AYdempHXD2R1UySRUBwP0rhmcWTwEWAeF",
  "ZTIcka7fbbFKc2P6rFsHqql/c5FnqXBN0INg2AQMIFWGewje/9YpFD0qqbegBCzL1Ow+fU+77cdsp6IqksQomh4oWQGRAiYNoC/dmZE73KJiXcxYuXSVD3G/",
  "AlI1UW30HY4i6/yaoqQzgFqBeAyFLo0qOuwhikd9cmCz4ILSL0jX4ObeQrbEkeumgvH8VipWjdtFZm25i884QW0AbIg+ho2JXnTtVcWG84koKbnHxgtpVXhL",
  "HJiJKt5acEBlh9OhkmI4rZ9PwRnZiqQNfKGT7svtX9tInEnzYPznYDlH8dKAhSdnbl+qAoC1p9jGpy54RHFvA8h3Paw+m3wTNNvEjTkQU2Gg/Zt6JORmD/jn",
  "j3FmblZ7XpmZnz/r8Zkn31VtiS6JM6mTo815i6W8VUy9VhefUHJFOG+dRJxk1ggHboxOBdmzPVqOVNbVqNA7IaSkluQyrLeS5HC5eAfZzcyGfqU/JHWmjBti",
  "2TKORN2ovLP6cz5lqYnsKaJvAjMQ2TOCc06rjA9/BcHLC4g1WD4rzfFcPiwOPssUUqqHmFBKi1x+/Ak/67uIF+e5Yq8PFgLjyaSREw6Or2jFLJ2atjOTJdxc",
  "z1/7uTmrzumQ505JiHu7pKdHU/C6F6VvE0EgKIjFGe4izPnsQmUdf0Iw89N9G9wc8rmT7atjpiyiTATlMVaFhYPTB/FtSUaoU4YCsF6XWQOCuc+Ko6wRuJJ7",
  "ABSwNvmc61qb4pRnHXlQvAkjasJh/U54snBcptUT1xldYlbd1NXaxbVlgqBTGn2VoojYiiVozyKKk+dI+FiNx9g0OwnLdDs12Lj1B1u3VPAGNGp1tGdX77AD",
  "PPdMsBu1SL7gebpLlYP53lXc8alBjKniISuzFU87ZgaaLFSZL+/GLPp246lA5RwN6VOqdIhXPiap9GyhXmIlfuDJuSMd8osz1IqjsnKehyxNVh9p5efu6gGI",
  "wA3lFxtJa4Grqnrm2Y84OxvRmijqI+1rrt9VSjDiEWXidwoGSwTHbBgDIc0SUb6+BiQdrc8xa96Ag2zqfSS8I5jBfl9EU+EHk+Mj4s3cZ4EKQYVslVHIrEn7",
  "Tx7wrQA+Fc1SHKac6GFYD89w7x8JybMZxg3gNPZw6fCKjZoq5tc8Yh3XOPe1uUloXjyetCpkKCK3k9V+MCmC3tDgi4i7ZZndgbNa0W8iro6AHg8CegRQUieg",
  "OTR1+ymXY3HmWIa4MH7l31CfPJkqlQ3CKmTCYEybgybCfYtwtTAOmVRjxLle63NwVKA+qmP0Ha4KjNQZH2cfHobGaQSpZchREO8eWeEIN5G6ZzRg0ZOXhUPX",
  "e9DoNbsm4KniruZUvjM7ZkfVfoZRnDfRy0yWN7GGEm7RdLOZeT0UPzbPizHY54xFL9xybpR7bDyBJCv89fONDEqc19FjFp3HrOf7vefF5u1o7Ke1JEoNjLie",
  "gcuVUoEjzkHbnNN4YqQ9HJxABF7p7dU6D8bVrgZEZ4qHNo/m9wYdWz+9Zs3duZ+FUmcsCdpJTktg06Q2HteGeYbLVtK/wEeRbc7DSgKgSdYhhc5Fk+Xni8G2",
  "waWClpFOw5UintUKhi0cHAIDch11yhDfzGKj2OEYEl2pAmeO3/e3Oghtl2y0Ly7Hs8uITs37I8CaD6AKoPoyQYaHOuOp/DTmxD8cjO3avNhtc2Uw5FSYKeMp",
  "esHw6hnS84BDpt+Xvat7LjYM43gAoO0dm+uTYeV48SzrpcJClEMP3FSNwVPajTnr1711YiKUe3M6RU/927EyCyDO4UnBuPeNl+lMJ+htJEepCuoFZAQp9HmY",
  "toDO8qeOGiTmOY37emN61qWwhUhPKg7quCsSBu2aIlwRtKaPNPV7vV2nox7ABIjk+juqZLnTahZ5MViz+zwySANOOT0gTSYAvVSWPIqS4WIwhbYI3/4kw6tp",
  "Js2sbyeVKcqcIoBkBS6GdVRXkiyi/voWcczKkj+5fbtnmOWCSHTy4dX+GN7YxQPIPTAtb8Pxrcumv0UqPtW1a8y6ckURnSmKvM8VUlbcxOe77oANpHs6+3FB",
  "dLKuIpRoTPOO8OlZXppMOHAJboj4x13lPBFcxSj2gk6VGdhpBLhz5JppXuVGOVU8ya9APaHuZqPuuCZAaE7llImCTJqojJmoRSbUvIjo5RyK38eadfNVO3yH",
  "GJDVKjw5izBHsmFWSayoCetbSPp05T2/4uJ+uIcNMOjikA2vbvm3B0+f+crJMCZG4NEzEEiwJnJTPYDcFvuYWDvnHfJcy4N6OM5NqtPedREUJFoKGGiIJd05",
  "T7kB1tWmXqveu10X12hWkknMTV61bNOVm3oKjwUK9wVj2vU3I9eof77zg05gie5D8Ha3CtNIGSai1I5AJVHlIDoF6zidYgLAa9Qj9wGl6wsI4tPD6462CxSO",
  "C8W7sgp9PcNT8M/Xw2UmPRTfq7mgO6z0ZmrdajRREHnL7CS3xL2ykWci7XsiCI8KrHvBJiOTyq5EbbZ27j2HqLSMBsyO4nbdyYwbSuB1KAFwaTxM4YAd6z4r",
  "qJ5oIkd5etnQCw1AElgHPQCwiiefrO9HtVJrXUAEXDjLh663CAcu/LBIBwZuWgMIj3o7VBUHsqjsQiliUafpYVCWTxbofWcXMrL4FznGxYyZPOPxL5aY9h5u",
  "FdccJQ8B1OW8AAofBKpgAQdtSC/sgwqptFaYSJmdWKr+9pTB327v15CHlWlRqX9LbkSuEUINHXEqcRZKxCA9gdyJL/9IKSRxRquO8mwwqDeMYCi8q02EKZDl",
  "sHPRwPIT+zbSl9dpVpzhxZqmfW9nqQTLKYRJCj/gOsk89zYhDOvUQVLUu+Diaw2DZtJ3mDTkLOV5LRKDRDgFZy5GmgTDnqYplLM4SXkuQKJzEYDP5nPY2Kun",
  "TxHzuUdeiXqoMEy3Qy7WWdaqsTMDPwpUSXJX4QHnoNkCj48PzjNhRq1LYMbcrxpZ66Ri4hoGSyBftjTg9PHmV0Onr5HHDGkIYewMKqTLPPLMGw+98HAi17gw",
  "91gaom0D3a38wo45X9OZShqvNq9GtrqxFS1Xhvo04wN9u82gdmEOb1mRYq1pkEd4V/1ePdG03l9A9FtKhfVvyC0p8IBpJzXiBqYlRQVnWOfRkEZhapf6UEc1",
  "Jbg6U/SgfUA8m32HDYu5B1tAEXWaQ84zVhzZz33nk+v4zquGSHPjc7XcPAI0H1TcIrQcm3c+J4TFSRXlw7IQH1AvI7KajHCKGUXZxfboDe4XbUQY4VSZSmo3",
  "DpgjvWUvz8GPwyK6nXVLqd+1DnFYTqdT/w7BwylJQUUSgh92wkZ978Km5B8KPS53vGCVAWulw4HufOoGlhgcVVgjK1Um42q8hbvboOJWmJplyCpdQ6KIAXWM",
  "C/eBGjvQ2zMMXZgVn5XEKAyhKu/HaS70VGdqldiOEmTVLmrQUFAAva47flKERQ3FGJFTZa9JhRWz6tIw0MkYhboZcA5QFJDsUoKcqZ0Y25i9d0fDdxMr/lUn",
  "TGnAUyjCyRVFgEMS78svUHJO1zTKjqh55utM7WbxSGB8wjKZWQZaRMyjF51uV2yX30ys6QJdQlVeq+FmNeV2GFYdMN1nZOH9Qm/V7ON0nzy138w4h+06I2i6",
  "3BP8pvkcBcRdAgqvRE5/CFCcMFVAeQqc75UnvmcErhOLsk5BUFx0fXWYnqDBojRdo1eTPOZW5aQY4rddxh07F60zTpJtP5U6wyGf8a8jQaTRXy5MzsNA1cNb",
  "LtiVNvExT8VpxMrmvDxr9Hn5QMuugyRoBBDWhW6gwFHJJ2Ti95SsqYe7QfRKb+/AzrqM1ncIx7Y6cArFH2QnWeYEYaEcni3e0ZWrII4aUDfFToqLld3wYRRM",
  "gR4wpa7/uWDNXcEU10GpAIrtdZh1Yh2scid13TfmYJ3HYKEqkPqQoHiQkTxFiCeV8iRfznUIsHEKBUbMD+MKWQAeZD8zlWfClQv3TxKwDbD2rTWCI1RuYysm",
  "M4EX7gjJ6FxYkjVlEb1XKhYyUUYTLMNhUm5gHVhlcuw+JLNy6EuQcC4mZTokGQEFQHjGNwl2P6cBS3xKO+c4ngNyxo2YwyytGulE5gNiwKXJuzoYv/DgrYIc",
  "jyUPVw2i+gNDk1wFHC8VPE3sxCZBdDDdY3KPPu6V9aXmLdN1U+bZ/uFvxzpReDL8dNlvlcJHVJwXRBosDjYqO8N7svIJEz2PkSrmnRhGeXEuTmgqJ1kTVYAp",
  "UuivoTr3KDwEjkQQKY7e0nDdFKJql86QW+cBRxCSuFib7CCfsTfHLPIcTi7yd+EAbDKLeOJQB6qEPd8N0jmQCxidJ+UYZ+jtB2FeJP7y6MxRjsjBnAkKWIfJ",
  "oerdRH+f4SgJpTXsTnHLftbcpuJO7qC5Rl+PI/yZGkVqmpVWcs6fVc+J2wIQbL0XAMwCyFpjni9orYDwQjA9xk3gj5IDH478audSRVOpf5uwNMKoDTbdden/",
  "RAIg94Q2oY+eG14CymVMYZqCIx53okpxKJNwm2S65N6ADLlZYMpmVFfQ8uDjJtMonmVNKRgsxpIQtkWkzzVV19m0dd1X5Ty5Aq3pMMyyikXdTOwV5XB48elI",
  "+1qPUq4pmqdUNTHourKGZ3s6NBgKuiIjHNxHEhOlAfAQk7maSjg16bwtfQ9OcjTIuEA0S3uZVYOqIXdEVQPXzQnsKYTNk4A8h4YEaXMGNRvZVRJnl/Ma3sXq",
  "ZWg465ujsfG184sKd8yCN/uMt4hHG/5zTQsxoC5QCA4hDlsEWG5yICODF+MBcl1kfNz+qhK8BRZQPxExsZOz7w3SgaTy4joaBEl4yHwFdJ6l3JOQY5W6qVq3",
  "NKufGIW22VwVNqpY/n2P+FroLVZ5UmiwkO8lYqUcT04SOYVx/UIXEoco4XBBzWj0Eelek3VQsyv8RLuYM4y6mm6YVFc+epgHVQN8D6HHz8xMjoW+vLeRQRE5",
  "3ec3B+hs4JE7fX7dVRwiTNlP0jcdg7R8mlCOIyTtX4SYRnD74RYBSedT5zpL2/J9gPoDjVt2Gev8/wFPNXpU6c7tmwAAAABJRU5ErkJggg==",
];

export const SAMPLE_IMAGE_B64 = PARTS.join("");
