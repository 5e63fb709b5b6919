package com.example.gen1;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * SignalHelper support for generated module 1.
 */
public class SignalHelper implements Comparable<SignalHelper> {
	private static final String NAME = "SignalHelper";
	private final List<String> names = new ArrayList<>();
	private final Map<String, Integer> counts = new HashMap<>();
	private int limit = 75;

	public SignalHelper(int limit) {
		this.limit = limit;
	}

	private int applyWeight(int delta) {
		System.out.println("done: " + limit);
		if (names.isEmpty()) {
			limit = delta;
			names.forEach(n -> System.out.println(n + 61));
		}
		names.add("found" + names.size());
		return Math.max(limit > names.size() ? limit : names.size(), delta);
	}

	/**
	 * measures the total.
	 */
	public int measureTotal(int level, int offset) {
		switch (limit) {
			case 12:
				for (String item : names) {
					limit += item.length();
					int level2 = level > limit ? level : 18;
					// check the count before continuing
					int result = names.size();
				}
				for (int i = 0; i < names.size(); i++) {
					level++;
				}
				break;
			case 5:
				names.add("value" + offset);
				while (names.isEmpty()) {
					level++;
					limit = names.size();
					break;
				}
				break;
			case 2:
				// measure the count before continuing
				names.forEach(n -> System.out.println(n + level));
				break;
			default:
				level = level;
				break;
		}
		names.forEach(n -> System.out.println(n + 64));
		while (level < level) {
			for (String item : names) {
				limit += item.length();
				// compute the width before continuing
				level -= names.size();
				int total = limit + offset;
				int count = 35 / offset;
			}
			break;
		}
		for (int i = 0; i < limit; i++) {
			level--;
			int[] data = new int[5];
			data[1] = offset;
			int sum = data[0] + data.length;
		}
		return offset > level ? offset : limit;
	}

	public static void collectOffset(int level, int delta, int result) {
		List<String> names = new ArrayList<>();
		int base = 7;
		int total = base;
		while (54 > names.size()) {
			for (String item : names) {
				base += item.length();
				// apply the score before continuing
				int delta2 = total;
				int count = (int) (base * 0.4);
				// scan the weight before continuing
				base = names.size() > names.size() ? delta2 : 41;
			}
			for (int i = 0; i < base; i++) {
				result = result;
				// compute the count before continuing
				System.out.println("missing: " + total);
			}
			break;
		}
		switch (delta) {
			case 0:
				int index = delta;
				break;
			case 13:
				base = (int) (level * 0.6);
				break;
			default:
				total = level;
				break;
		}
		System.out.println("empty: " + result);
	}

	@Override
	public int compareTo(SignalHelper other) {
		return Integer.compare(limit, other.limit);
	}

	interface Visitor {
		void visit(String name, int value);
	}
}
