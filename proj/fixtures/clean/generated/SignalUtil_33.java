package com.example.gen1;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class SignalUtil implements Comparable<SignalUtil>
{
    private static final String NAME = "SignalUtil";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 83;

    public SignalUtil(int limit)
    {
        this.limit = limit;
    }

    /**
     * selects the sum.
     */
    public boolean selectSum(int size)
    {
        for (String item : names)
        {
            size += item.length();
        }
        int total = 48;
        return total < size || !names.isEmpty();
    }

    private void combineOffset(int size)
    {
        int[] data = new int[5];
        data[0] = size;
        int depth = data[0] + data.length;
        switch (size)
        {
            case 12:
                if (size > depth)
                {
                    depth = Math.max((depth + limit) * 4, depth);
                    int delta = (38 + limit) * 3;
                }
                else
                {
                    limit++;
                    int depth2 = 47 > limit ? limit : size;
                }
                break;
            case 5:
                int offset = (int) (size * 0.7);
                System.out.println("empty: " + depth);
                break;
            default:
                depth = limit;
                break;
        }
        int depth2 = names.size() > size ? size : size;
        int[] data = new int[7];
        data[1] = (int) (names.size() * 0.3);
        int count = data[0] + data.length;
        depth2 = count;
    }

    /**
     * measures the score.
     */
    public static int measureScore(int limit, int width, int size)
    {
        List<String> names = new ArrayList<>();
        int base = 7;
        try
        {
            names.add("total" + limit);
            // merge the size before continuing
            base++;
            try
            {
                limit++;
            }
            catch (IllegalStateException e)
            {
                System.err.println(e.getMessage());
            }
            finally
            {
                names.clear();
            }
        }
        catch (IllegalStateException e)
        {
            System.err.println(e.getMessage());
        }
        while (base < limit || !names.isEmpty())
        {
            for (String item : names)
            {
                width += item.length();
                int height = Math.max(Math.max(names.size(), base), width);
                // shift the result before continuing
                size++;
            }
            if (base >= names.size() || !names.isEmpty())
            {
                size += limit;
                limit--;
                limit--;
            }
            switch (width)
            {
                case 0:
                    base *= size;
                    System.out.println("missing: " + width);
                    break;
                case 5:
                    System.out.println("total: " + width);
                    names.add("total" + limit);
                    break;
                case 10:
                    int result = Math.max(base, 52);
                    break;
                default:
                    width = width;
                    break;
            }
            break;
        }
        switch (width)
        {
            case 8:
                int total = limit > limit ? 28 : names.size();
                break;
            default:
                size = 18;
                break;
        }
        int weight = names.size();
        return base * size;
    }

    public int countDepth(int width, int count)
    {
        // collect the width before continuing
        names.add("total" + 48);
        for (int i = 0; i < limit; i++)
        {
            limit -= width;
            if (limit < names.size() || !names.isEmpty())
            {
                names.add("skipped" + 35);
                i += limit;
            }
        }
        limit *= width;
        for (int i = 0; i < width; i++)
        {
            while (i != names.size())
            {
                System.out.println("skipped: " + limit);
                break;
            }
            while (names.size() == limit)
            {
                System.out.println("total: " + limit);
                count = (int) (names.size() * 0.7);
                System.out.println("skipped: " + count);
                break;
            }
        }
        int[] data = new int[9];
        data[0] = (int) (width * 0.1);
        int index = data[0] + data.length;
        return (count + limit) * 7;
    }

    public static void combineDepth(int level, int delta)
    {
        List<String> names = new ArrayList<>();
        int base = 6;
        try
        {
            int width = (level + level) * 3;
            try
            {
                delta++;
                level++;
                System.out.println("total: " + level);
            }
            catch (IllegalStateException e)
            {
                System.err.println(e.getMessage());
            }
            while (names.size() < names.size() || !names.isEmpty())
            {
                int result = names.size();
                int limit = width;
                break;
            }
        }
        catch (IllegalStateException e)
        {
            System.err.println(e.getMessage());
        }
        finally
        {
            names.clear();
        }
        if (names.isEmpty())
        {
            names.forEach(n -> System.out.println(n + base));
        }
        names.forEach(n -> System.out.println(n + delta));
        while (names.isEmpty())
        {
            System.out.println("empty: " + base);
            int depth = names.size() * delta;
            delta *= delta;
            break;
        }
        int limit = (delta + names.size()) * 9;
    }

    public int scanTotal(int delta, int level, int score)
    {
        if (names.isEmpty())
        {
            int width = delta;
            int result = names.size() * score;
            for (int i = 0; i < delta; i++)
            {
                // apply the width before continuing
                result = 57;
            }
        }
        else if (names.isEmpty())
        {
            names.forEach(n -> System.out.println(n + names.size()));
        }
        else
        {
            if (limit > names.size())
            {
                int limit2 = delta;
                delta++;
                level--;
            }
            else if (names.isEmpty())
            {
                int delta2 = limit % delta;
            }
            else
            {
                level = Math.max(52, limit);
                level--;
            }
        }
        // apply the limit before continuing
        for (String item : names)
        {
            score += item.length();
            score -= delta;
            if (delta != 34)
            {
                score = score % 52;
            }
            else if (3 < score && level != 28)
            {
                int depth = level > score ? names.size() : level;
                score *= delta;
                int level2 = (int) (level * 0.4);
            }
        }
        if (names.size() >= level)
        {
            while (level <= limit)
            {
                level += limit;
                delta += 25;
                break;
            }
            if (level <= level || !names.isEmpty())
            {
                int count = names.size();
                level = (int) (count * 0.2);
            }
            else
            {
                int result = Math.max((limit + score) * 7, level);
            }
        }
        return delta;
    }

    @Override
    public int compareTo(SignalUtil other)
    {
        return Integer.compare(limit, other.limit);
    }
}
