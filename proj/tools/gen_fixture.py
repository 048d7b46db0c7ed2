#!/usr/bin/env python3
# Copyright 2026 The ncverify Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates data/campus_fixture.json, the clean nine-router campus model.

top hangs off dc over area 0; dc and campus1..campus7 form a ring in which
every link is its own VLAN, subnet and OSPF area. Virtual links chain every
campus back to dc through the transit areas of the ring.

Usage: tools/gen_fixture.py > data/campus_fixture.json
"""

import json
import sys

CAMPUSES = [f"campus{k}" for k in range(1, 8)]
HOSTS = ["top", "dc"] + CAMPUSES

ROUTER_ID = {"top": "1.1.1.1", "dc": "2.2.2.2"}
for k, host in enumerate(CAMPUSES, start=1):
    ROUTER_ID[host] = ".".join([str(k + 2)] * 4)

# (end a, port a, end b, port b, vlan, area, host octet a, host octet b)
LINKS = [
    ("top", 2, "dc", 2, 10, 0, 1, 2),
    ("dc", 4, "campus7", 4, 90, 8, 1, 2),
    ("dc", 3, "campus1", 2, 20, 1, 1, 2),
    ("campus1", 3, "campus2", 2, 30, 2, 1, 2),
    ("campus2", 3, "campus3", 2, 40, 3, 1, 2),
    ("campus3", 3, "campus4", 2, 50, 4, 1, 2),
    ("campus4", 3, "campus5", 2, 60, 5, 1, 2),
    ("campus5", 3, "campus6", 2, 70, 6, 2, 1),
    ("campus6", 3, "campus7", 2, 80, 7, 1, 2),
]
TRUNK_VLANS = {40}  # carried on an 802.1Q trunk with native VLAN 1

# Virtual links (router, router, transit area), configured on both ends.
VIRTUAL_LINKS = [
    ("dc", "campus1", 1),
    ("campus1", "campus2", 2),
    ("campus2", "campus3", 3),
    ("campus3", "campus4", 4),
    ("dc", "campus7", 8),
    ("campus7", "campus6", 7),
    ("campus6", "campus5", 6),
]

SPARE_PORT = {"top": 3, "dc": 5, "campus7": 3}


def main():
    nodes, edges = [], []

    def node(kind, value_name, **fields):
        nodes.append({"kind": kind, "name": value_name, "fields": fields})
        return value_name

    # Per-host view of the links.
    ports = {h: [] for h in HOSTS}
    for a, pa, b, pb, vlan, area, oa, ob in LINKS:
        net = f"10.0.{vlan // 10}"
        ports[a].append((pa, vlan, area, f"{net}.{oa}", net, f"{a}-{b}"))
        ports[b].append((pb, vlan, area, f"{net}.{ob}", net, f"{a}-{b}"))

    for host in HOSTS:
        model = "C892J" if host in ("top", "dc") else "C1812J"
        config = node("Config", host, deviceModel=model)
        edges.append([config, node("HostName", f"{host}_HN", name=host)])
        ether_type = node("EthernetType", f"{host}_FE", fastEthernet="true")
        edges.append([config, node("StpSetting", f"{host}_STP",
                                   bridgePriority="32768", Vlan="1",
                                   Mode="pvst")])

        edges.append([config, node("Vlan", f"{host}_V1", num="1",
                                   name="default")])
        for port, vlan, area, ip, net, label in sorted(ports[host]):
            edges.append([config, node("Vlan", f"{host}_V{vlan}",
                                       num=str(vlan), name=label)])
        for port, vlan, area, ip, net, label in sorted(ports[host]):
            edges.append([config, node("VlanSetting", f"{host}_VS{vlan}",
                                       vlanNum=str(vlan), ipAddress=ip,
                                       subnetMask="255.255.255.0")])

        spare = SPARE_PORT.get(host, 4)
        port_fields = {}
        for port, vlan, area, ip, net, label in ports[host]:
            if vlan in TRUNK_VLANS:
                port_fields[port] = dict(port=str(port), mode="trunk",
                                         nativeVlan="1",
                                         allowedVlan=f"1,{vlan}")
            else:
                port_fields[port] = dict(port=str(port), mode="access",
                                         accessVlan=str(vlan))
        port_fields[spare] = dict(port=str(spare), shutdown="true")
        for port in sorted(port_fields):
            es = node("EthernetSetting", f"{host}_Fa{port}",
                      **port_fields[port])
            edges.append([config, es])
            edges.append([es, ether_type])

        ospf = node("OspfSetting", f"{host}_OSPF", processId="1",
                    routerId=ROUTER_ID[host])
        edges.append([config, ospf])
        for port, vlan, area, ip, net, label in sorted(ports[host],
                                                      key=lambda p: p[2]):
            edges.append([ospf, node(
                "OspfInterfaceSetting", f"{host}_OS{area}",
                ipAddress=f"{net}.0", wildcardMask="0.0.0.255",
                areaId=str(area), helloInterval="10", deadInterval="40",
                ospdNetworkMode="broadcast", priority="1")])
        for a, b, area in VIRTUAL_LINKS:
            if host in (a, b):
                peer = b if host == a else a
                edges.append([ospf, node("OspfVirtualLink",
                                         f"{host}_VL_{peer}",
                                         areaId=str(area),
                                         routerId=ROUTER_ID[peer])])

    for a, pa, b, pb, vlan, area, oa, ob in LINKS:
        link = node("Link", f"L_{a}_{b}")
        edges.append([link, f"{a}_Fa{pa}"])
        edges.append([link, f"{b}_Fa{pb}"])

    json.dump({"nodes": nodes, "edges": edges}, sys.stdout, indent=2)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
